//! The λ-model energy layer: couplings, ball energies, the ten symbolic
//! energy classes, and exact parameter-space regions.
//!
//! An edge whose endpoints carry spins i, j ∈ Φ = {1,2,3} costs a if
//! |i−j| = 2, b if |i−j| = 1, and c if i = j. A unit ball's energy is half
//! the sum over its three center–neighbor edges (each tree edge lies in
//! exactly two balls), so up to symbols it is determined by the *multiset* of
//! its three edge couplings — one of ten classes. Classes are always computed
//! symbolically from spins, never by comparing numeric energies, so they stay
//! distinct even at parameter points where energies collide (e.g. a = b = c).
//!
//! All arithmetic is exact: parameters are arbitrary-precision rationals and
//! region membership is decided by exact equality with the minimum.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational energy.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("spin value {value} outside 1..=3")]
    InvalidSpin { value: u8 },
    #[error("class index {value} outside 1..=10")]
    InvalidClassIndex { value: u8 },
    #[error("a region needs a nonempty set of forced-minimum couplings")]
    EmptyRegion,
    #[error("cannot take the region of an empty class set")]
    EmptyClassSet,
    #[error("not an exact decimal number: {input:?}")]
    InvalidDecimal { input: String },
}

/// A spin value from Φ = {1, 2, 3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spin(u8);

impl Spin {
    pub const ALL: [Spin; 3] = [Spin(1), Spin(2), Spin(3)];

    pub fn new(value: u8) -> Result<Spin, ModelError> {
        if (1..=3).contains(&value) {
            Ok(Spin(value))
        } else {
            Err(ModelError::InvalidSpin { value })
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Reflection across the middle of Φ: v ↦ 4 − v. Preserves |i − j|.
    pub fn reflected(self) -> Spin {
        Spin(4 - self.0)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One of the three couplings, named after its energy parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coupling {
    /// Applies to spin pairs with |i − j| = 2.
    A,
    /// Applies to spin pairs with |i − j| = 1.
    B,
    /// Applies to equal spins.
    C,
}

impl Coupling {
    pub const ALL: [Coupling; 3] = [Coupling::A, Coupling::B, Coupling::C];

    pub fn symbol(self) -> char {
        match self {
            Coupling::A => 'a',
            Coupling::B => 'b',
            Coupling::C => 'c',
        }
    }

    /// The coupling the λ table assigns to a spin pair.
    pub fn between(i: Spin, j: Spin) -> Coupling {
        match i.0.abs_diff(j.0) {
            2 => Coupling::A,
            1 => Coupling::B,
            _ => Coupling::C,
        }
    }
}

impl fmt::Display for Coupling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// The coupling energies (a, b, c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl LambdaParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        LambdaParams { a, b, c }
    }

    /// Integer-valued parameters, the common case in fixed test points.
    pub fn from_integers(a: i64, b: i64, c: i64) -> Self {
        LambdaParams {
            a: Rational::from_integer(a.into()),
            b: Rational::from_integer(b.into()),
            c: Rational::from_integer(c.into()),
        }
    }

    pub fn get(&self, coupling: Coupling) -> &Rational {
        match coupling {
            Coupling::A => &self.a,
            Coupling::B => &self.b,
            Coupling::C => &self.c,
        }
    }

    /// min(a, b, c), by exact comparison.
    pub fn min(&self) -> &Rational {
        let mut m = &self.a;
        if &self.b < m {
            m = &self.b;
        }
        if &self.c < m {
            m = &self.c;
        }
        m
    }
}

impl fmt::Display for LambdaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a={}, b={}, c={})",
            format_exact(&self.a),
            format_exact(&self.b),
            format_exact(&self.c)
        )
    }
}

/// λ(i, j): the energy of an edge whose endpoints carry spins i and j.
pub fn lambda_value(i: Spin, j: Spin, p: &LambdaParams) -> Rational {
    p.get(Coupling::between(i, j)).clone()
}

/// Spins on a unit ball: the center spin plus the multiset (stored sorted) of
/// its three neighbor spins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BallConfig {
    center: Spin,
    neighbors: [Spin; 3],
}

impl BallConfig {
    pub fn new(center: Spin, mut neighbors: [Spin; 3]) -> Self {
        neighbors.sort_unstable();
        BallConfig { center, neighbors }
    }

    pub fn center(&self) -> Spin {
        self.center
    }

    pub fn neighbor_spins(&self) -> [Spin; 3] {
        self.neighbors
    }

    /// B^(i): the number of neighbors carrying spin i.
    pub fn neighbor_count(&self, i: Spin) -> usize {
        self.neighbors.iter().filter(|&&s| s == i).count()
    }

    /// All 30 ball shapes: 3 center spins × 10 neighbor multisets.
    pub fn all() -> Vec<BallConfig> {
        let mut out = Vec::with_capacity(30);
        for center in Spin::ALL {
            for i in Spin::ALL {
                for j in Spin::ALL.into_iter().filter(|&j| j >= i) {
                    for l in Spin::ALL.into_iter().filter(|&l| l >= j) {
                        out.push(BallConfig::new(center, [i, j, l]));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for BallConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}|{{{},{},{}}}",
            self.center, self.neighbors[0], self.neighbors[1], self.neighbors[2]
        )
    }
}

/// U(σ_b) = ½ Σ λ(center, neighbor) over the ball's three edges.
pub fn ball_energy(cfg: &BallConfig, p: &LambdaParams) -> Rational {
    let sum: Rational = cfg
        .neighbors
        .iter()
        .map(|&s| lambda_value(cfg.center, s, p))
        .sum();
    sum / Rational::from_integer(2.into())
}

/// One of the ten ball-energy classes C_1..C_10, identified with the size-3
/// multiset of edge couplings it stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassIndex(u8);

/// Coupling multisets of C_1..C_10, in canonical (sorted) order per class.
const CLASS_SYMBOLS: [[Coupling; 3]; 10] = {
    use Coupling::{A, B, C};
    [
        [A, A, A], // C_1: U = 3a/2
        [B, B, B], // C_2: U = 3b/2
        [C, C, C], // C_3: U = 3c/2
        [A, B, B], // C_4: U = a/2 + b
        [A, C, C], // C_5: U = a/2 + c
        [A, A, B], // C_6: U = b/2 + a
        [B, C, C], // C_7: U = b/2 + c
        [A, A, C], // C_8: U = c/2 + a
        [B, B, C], // C_9: U = c/2 + b
        [A, B, C], // C_10: U = (a+b+c)/2
    ]
};

impl ClassIndex {
    pub const ALL: [ClassIndex; 10] = [
        ClassIndex(1),
        ClassIndex(2),
        ClassIndex(3),
        ClassIndex(4),
        ClassIndex(5),
        ClassIndex(6),
        ClassIndex(7),
        ClassIndex(8),
        ClassIndex(9),
        ClassIndex(10),
    ];

    pub fn new(m: u8) -> Result<ClassIndex, ModelError> {
        if (1..=10).contains(&m) {
            Ok(ClassIndex(m))
        } else {
            Err(ModelError::InvalidClassIndex { value: m })
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// The class's coupling multiset, sorted.
    pub fn symbols(self) -> [Coupling; 3] {
        CLASS_SYMBOLS[self.0 as usize - 1]
    }

    /// The class of a coupling multiset, in any order.
    pub fn from_symbols(mut symbols: [Coupling; 3]) -> ClassIndex {
        symbols.sort_unstable();
        let idx = CLASS_SYMBOLS
            .iter()
            .position(|s| *s == symbols)
            .expect("every sorted coupling triple is one of the ten classes");
        ClassIndex(idx as u8 + 1)
    }
}

impl fmt::Display for ClassIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.0)
    }
}

/// The symbolic class of a ball: the multiset of its three edge couplings.
pub fn ball_class(cfg: &BallConfig) -> ClassIndex {
    let syms = cfg.neighbors.map(|s| Coupling::between(cfg.center, s));
    ClassIndex::from_symbols(syms)
}

/// U_m: half the sum of the class's three coupling energies.
pub fn class_energy(m: ClassIndex, p: &LambdaParams) -> Rational {
    let sum: Rational = m.symbols().iter().map(|&s| p.get(s).clone()).sum();
    sum / Rational::from_integer(2.into())
}

/// Membership in A_m: does U_m attain the minimum of all ten class energies?
/// Equivalently (and exactly): does every coupling in m's multiset equal
/// min(a,b,c)? Both reads are exercised by tests; this computes the first.
pub fn region_membership(m: ClassIndex, p: &LambdaParams) -> bool {
    let e = class_energy(m, p);
    ClassIndex::ALL.iter().all(|&k| e <= class_energy(k, p))
}

/// A canonical ground-state parameter region: the set T of couplings forced
/// to equal min(a,b,c). Only seven such regions exist; the classical names
/// A_1..A_10 collapse onto them (A_4 = A_6, A_5 = A_8, A_7 = A_9).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Region {
    forced_min: BTreeSet<Coupling>,
}

impl Region {
    pub fn new(forced: impl IntoIterator<Item = Coupling>) -> Result<Region, ModelError> {
        let forced_min: BTreeSet<Coupling> = forced.into_iter().collect();
        if forced_min.is_empty() {
            return Err(ModelError::EmptyRegion);
        }
        Ok(Region { forced_min })
    }

    pub fn forced_min(&self) -> &BTreeSet<Coupling> {
        &self.forced_min
    }

    /// Exact membership: every forced coupling equals min(a,b,c).
    pub fn contains(&self, p: &LambdaParams) -> bool {
        let m = p.min();
        self.forced_min.iter().all(|&s| p.get(s) == m)
    }

    /// The full region {a = b = c}, the intersection of all ten A_m.
    pub fn diagonal() -> Region {
        Region {
            forced_min: Coupling::ALL.into_iter().collect(),
        }
    }

    /// Canonical form, e.g. `T={b,c}`.
    pub fn canonical_label(&self) -> String {
        let names: Vec<String> = self
            .forced_min
            .iter()
            .map(|s| s.symbol().to_string())
            .collect();
        format!("T={{{}}}", names.join(","))
    }

    /// The classical A_m names for this region, e.g. `A7=A9`.
    pub fn classical_label(&self) -> String {
        let names: Vec<String> = ClassIndex::ALL
            .iter()
            .filter(|m| {
                let syms: BTreeSet<Coupling> = m.symbols().into_iter().collect();
                syms == self.forced_min
            })
            .map(|m| format!("A{}", m.index()))
            .collect();
        names.join("=")
    }

    /// The defining constraints, e.g. `{b=c<=a}`.
    pub fn constraint_label(&self) -> String {
        let forced: Vec<char> = self.forced_min.iter().map(|s| s.symbol()).collect();
        let free: Vec<char> = Coupling::ALL
            .iter()
            .filter(|s| !self.forced_min.contains(s))
            .map(|s| s.symbol())
            .collect();
        let tie = forced
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("=");
        if free.is_empty() {
            format!("{{{tie}}}")
        } else {
            let bounds: Vec<String> = free.iter().map(|f| format!("{tie}<={f}")).collect();
            format!("{{{}}}", bounds.join(", "))
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} {})",
            self.canonical_label(),
            self.classical_label(),
            self.constraint_label()
        )
    }
}

/// The region on which *every* class in S is minimal: ∩_{m∈S} A_m, i.e. the
/// union of the classes' coupling multisets all forced to the minimum.
pub fn region_of_classes(
    classes: impl IntoIterator<Item = ClassIndex>,
) -> Result<Region, ModelError> {
    let mut forced = BTreeSet::new();
    let mut any = false;
    for m in classes {
        any = true;
        forced.extend(m.symbols());
    }
    if !any {
        return Err(ModelError::EmptyClassSet);
    }
    Ok(Region { forced_min: forced })
}

/// Region equality is equality of canonical forms. Tests confirm this matches
/// pointwise membership on representatives of all 13 parameter order types.
pub fn region_equal(r1: &Region, r2: &Region) -> bool {
    r1 == r2
}

/// Parse an exact decimal string like `"3"`, `"-0.25"`, or `"1.5"` into a
/// rational (`"0.1"` → 1/10 exactly). Exponents and non-decimal forms are
/// rejected — inputs are energies, and their decimal text is taken literally.
pub fn parse_decimal(input: &str) -> Result<Rational, ModelError> {
    let err = || ModelError::InvalidDecimal {
        input: input.to_owned(),
    };
    let s = input.trim();
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(err());
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().map_err(|_| err())?
    };
    let ten = BigInt::from(10);
    for b in frac_part.bytes() {
        numer = &numer * &ten + BigInt::from(b - b'0');
    }
    let denom = ten.pow(frac_part.len() as u32);
    Ok(Rational::new(BigInt::from(sign) * numer, denom))
}

/// Render a rational exactly: as a terminating decimal when the denominator
/// divides a power of ten, otherwise as a literal fraction `p/q`.
pub fn format_exact(x: &Rational) -> String {
    let mut denom = x.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&denom % &two).is_zero() {
        denom /= &two;
        twos += 1;
    }
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return format!("{}/{}", x.numer(), x.denom());
    }
    let places = twos.max(fives);
    if places == 0 {
        return x.numer().to_string();
    }
    let scaled = (x.numer() * BigInt::from(10).pow(places)) / x.denom();
    let mut digits = scaled.abs().to_string();
    if digits.len() <= places as usize {
        digits = format!(
            "{}{}",
            "0".repeat(places as usize + 1 - digits.len()),
            digits
        );
    }
    let split = digits.len() - places as usize;
    let sign = if x.numer().is_negative() { "-" } else { "" };
    format!("{sign}{}.{}", &digits[..split], &digits[split..])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: i64, b: i64, c: i64) -> LambdaParams {
        LambdaParams::from_integers(a, b, c)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn spin(v: u8) -> Spin {
        Spin::new(v).unwrap()
    }

    fn cfg(center: u8, n: [u8; 3]) -> BallConfig {
        BallConfig::new(spin(center), n.map(spin))
    }

    fn class(m: u8) -> ClassIndex {
        ClassIndex::new(m).unwrap()
    }

    #[test]
    fn lambda_table() {
        let q = p(10, 20, 30);
        assert_eq!(lambda_value(spin(1), spin(3), &q), rat(10, 1));
        assert_eq!(lambda_value(spin(2), spin(2), &q), rat(30, 1));
        assert_eq!(lambda_value(spin(3), spin(2), &q), rat(20, 1));
        // Symmetry in the pair.
        assert_eq!(
            lambda_value(spin(3), spin(1), &q),
            lambda_value(spin(1), spin(3), &q)
        );
    }

    #[test]
    fn ball_energy_is_half_the_edge_sum() {
        assert_eq!(ball_energy(&cfg(2, [2, 2, 2]), &p(7, 9, 4)), rat(12, 2)); // 3c/2
        assert_eq!(ball_energy(&cfg(2, [1, 2, 3]), &p(1, 2, 3)), rat(7, 2)); // (b+c+b)/2
        assert_eq!(ball_energy(&cfg(1, [3, 3, 3]), &p(5, 1, 1)), rat(15, 2)); // 3a/2
    }

    #[test]
    fn ball_class_is_the_coupling_multiset() {
        assert_eq!(ball_class(&cfg(2, [1, 2, 3])), class(9)); // {b,b,c}
        assert_eq!(ball_class(&cfg(1, [1, 1, 1])), class(3));
        assert_eq!(ball_class(&cfg(1, [3, 3, 1])), class(8)); // {a,a,c}
                                                              // Neighbor order is immaterial (multiset).
        assert_eq!(
            ball_class(&cfg(2, [3, 1, 2])),
            ball_class(&cfg(2, [1, 2, 3]))
        );
    }

    #[test]
    fn class_energies_match_the_table() {
        let q = p(1, 2, 3);
        let expected: [Rational; 10] = [
            rat(3, 2), // 3a/2
            rat(6, 2), // 3b/2
            rat(9, 2), // 3c/2
            rat(5, 2), // a/2 + b
            rat(7, 2), // a/2 + c
            rat(4, 2), // b/2 + a
            rat(8, 2), // b/2 + c
            rat(5, 2), // c/2 + a
            rat(7, 2), // c/2 + b
            rat(6, 2), // (a+b+c)/2
        ];
        for (m, want) in ClassIndex::ALL.iter().zip(expected) {
            assert_eq!(class_energy(*m, &q), want, "U_{}", m.index());
        }
    }

    #[test]
    fn ball_and_class_energies_agree_on_all_shapes() {
        let q = p(-3, 11, 7);
        for b in BallConfig::all() {
            assert_eq!(ball_energy(&b, &q), class_energy(ball_class(&b), &q));
        }
        assert_eq!(BallConfig::all().len(), 30);
    }

    #[test]
    fn region_membership_examples() {
        assert!(region_membership(class(3), &p(3, 2, 1)));
        assert!(region_membership(class(1), &p(1, 2, 3)));
        assert!(!region_membership(class(2), &p(1, 2, 3)));
        // A_5 = {a = c ≤ b}.
        assert!(region_membership(class(5), &p(1, 2, 1)));
        // On the diagonal every class is minimal.
        for m in ClassIndex::ALL {
            assert!(region_membership(m, &p(2, 2, 2)));
        }
    }

    #[test]
    fn membership_equals_forced_min_reading() {
        // The numeric definition (U_m minimal) coincides with the symbolic
        // one (every symbol of m equals the min) on all order types.
        let points = [
            p(1, 2, 3),
            p(1, 3, 2),
            p(2, 1, 3),
            p(3, 1, 2),
            p(2, 3, 1),
            p(3, 2, 1),
            p(1, 1, 2),
            p(1, 2, 1),
            p(2, 1, 1),
            p(1, 2, 2),
            p(2, 1, 2),
            p(2, 2, 1),
            p(2, 2, 2),
        ];
        for q in &points {
            for m in ClassIndex::ALL {
                let symbolic = m.symbols().iter().all(|&s| q.get(s) == q.min());
                assert_eq!(region_membership(m, q), symbolic, "{m} at {q}");
            }
        }
    }

    #[test]
    fn region_of_classes_unions_the_symbols() {
        let r = region_of_classes([class(3)]).unwrap();
        assert_eq!(r, Region::new([Coupling::C]).unwrap());
        let r = region_of_classes([class(3), class(7), class(9)]).unwrap();
        assert_eq!(r, Region::new([Coupling::B, Coupling::C]).unwrap());
        let r = region_of_classes([class(1), class(3), class(5)]).unwrap();
        assert_eq!(r, Region::new([Coupling::A, Coupling::C]).unwrap());
        assert_eq!(region_of_classes([]), Err(ModelError::EmptyClassSet));
    }

    #[test]
    fn region_contains_examples() {
        let bc = Region::new([Coupling::B, Coupling::C]).unwrap();
        assert!(bc.contains(&p(3, 1, 1)));
        assert!(!bc.contains(&p(1, 1, 3)));
        assert!(Region::diagonal().contains(&p(2, 2, 2)));
        assert!(!Region::diagonal().contains(&p(2, 2, 1)));
    }

    #[test]
    fn region_identities_and_labels() {
        let a7 = region_of_classes([class(7)]).unwrap();
        let a9 = region_of_classes([class(9)]).unwrap();
        assert!(region_equal(&a7, &a9));
        assert_eq!(a7.canonical_label(), "T={b,c}");
        assert_eq!(a7.classical_label(), "A7=A9");
        assert_eq!(a7.constraint_label(), "{b=c<=a}");

        let a1 = region_of_classes([class(1)]).unwrap();
        let a3 = region_of_classes([class(3)]).unwrap();
        assert!(!region_equal(&a1, &a3));
        // Membership separates them at a witness point.
        let witness = p(1, 2, 3);
        assert!(a1.contains(&witness) && !a3.contains(&witness));
        assert_eq!(a3.classical_label(), "A3");
        assert_eq!(a3.constraint_label(), "{c<=a, c<=b}");
        assert_eq!(Region::diagonal().classical_label(), "A10");
        assert_eq!(Region::diagonal().constraint_label(), "{a=b=c}");
        assert_eq!(
            region_of_classes([class(4)]).unwrap().classical_label(),
            "A4=A6"
        );
        assert_eq!(
            region_of_classes([class(5)]).unwrap().classical_label(),
            "A5=A8"
        );
    }

    #[test]
    fn min_class_energy_is_three_halves_of_min() {
        for q in [p(1, 2, 3), p(3, 1, 1), p(2, 2, 2), p(-5, 0, 7)] {
            let min_energy = ClassIndex::ALL
                .iter()
                .map(|&m| class_energy(m, &q))
                .min()
                .unwrap();
            assert_eq!(min_energy, rat(3, 2) * q.min());
        }
    }

    #[test]
    fn decimal_parsing_is_exact() {
        assert_eq!(parse_decimal("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_decimal("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_decimal("3").unwrap(), rat(3, 1));
        assert_eq!(parse_decimal("+1.50").unwrap(), rat(3, 2));
        assert_eq!(parse_decimal(".5").unwrap(), rat(1, 2));
        for bad in ["", "-", ".", "1e3", "0x1", "1.2.3", "NaN"] {
            assert!(parse_decimal(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn exact_formatting() {
        assert_eq!(format_exact(&rat(3, 2)), "1.5");
        assert_eq!(format_exact(&rat(-1, 4)), "-0.25");
        assert_eq!(format_exact(&rat(7, 1)), "7");
        assert_eq!(format_exact(&rat(1, 10)), "0.1");
        assert_eq!(format_exact(&rat(1, 8)), "0.125");
        assert_eq!(format_exact(&rat(1, 3)), "1/3");
        assert_eq!(format_exact(&rat(0, 1)), "0");
        // Round-trip through the parser for decimal-friendly denominators.
        for r in [rat(22, 5), rat(-9, 8), rat(1234, 1000)] {
            assert_eq!(parse_decimal(&format_exact(&r)).unwrap(), r);
        }
    }
}
