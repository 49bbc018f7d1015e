//! The formal algebra of polynomial functors.
//!
//! A polynomial functor is represented by its canonical decomposition: the
//! dimension of its constant part plus a multiplicity for each Schur
//! functor. Direct sum, tensor product, grading, shifting over a fixed
//! space, dimension evaluation and the well-founded order all operate on
//! this decomposition.

use crate::partition::{lr_coefficient, partitions_of, schur_dim, skew_schur_dim, syt_count, Partition};
use num::{BigUint, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A polynomial functor as a constant dimension plus Schur multiplicities.
///
/// The multiplicity map never stores a zero; partitions are keyed in the
/// deterministic size-then-reverse-lex order, which is also the
/// serialization order.
#[derive(Clone, PartialEq, Eq)]
pub struct PolynomialFunctor {
    constant_dim: BigUint,
    multiplicities: BTreeMap<Partition, BigUint>,
}

/// Outcome of comparing two functors in the well-founded order: at the
/// largest degree where the decompositions differ, every multiplicity of the
/// smaller functor is bounded by the corresponding one of the larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderVerdict {
    Smaller,
    Greater,
    Isomorphic,
    Incomparable,
}

impl PolynomialFunctor {
    /// The zero functor.
    pub fn zero() -> Self {
        PolynomialFunctor {
            constant_dim: BigUint::zero(),
            multiplicities: BTreeMap::new(),
        }
    }

    /// The constant functor of the given dimension.
    pub fn constant(dim: u64) -> Self {
        PolynomialFunctor {
            constant_dim: BigUint::from(dim),
            multiplicities: BTreeMap::new(),
        }
    }

    /// A single Schur functor.
    pub fn schur(shape: Partition) -> Self {
        Self::schur_with_multiplicity(shape, BigUint::one())
    }

    pub fn schur_with_multiplicity(shape: Partition, mult: BigUint) -> Self {
        let mut f = Self::zero();
        f.add_multiplicity(shape, mult);
        f
    }

    /// The decomposition of the d-th tensor power: each Schur functor of
    /// size d appears with multiplicity equal to its standard tableau
    /// count. The 0-th power is the constant functor of dimension one.
    pub fn schur_weyl(d: usize) -> Self {
        if d == 0 {
            return Self::constant(1);
        }
        let mut f = Self::zero();
        for shape in partitions_of(d) {
            let mult = syt_count(&shape);
            f.add_multiplicity(shape, mult);
        }
        f
    }

    pub fn constant_dim(&self) -> &BigUint {
        &self.constant_dim
    }

    /// Schur multiplicities in deterministic key order; zeros are absent.
    pub fn multiplicities(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.multiplicities.iter()
    }

    /// Multiplicity of one Schur functor, zero when absent.
    pub fn multiplicity(&self, shape: &Partition) -> BigUint {
        self.multiplicities
            .get(shape)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant_dim.is_zero() && self.multiplicities.is_empty()
    }

    /// The degree of the functor: the largest size of a stored partition,
    /// zero for constant functors.
    pub fn degree(&self) -> usize {
        self.multiplicities
            .keys()
            .map(|p| p.size())
            .max()
            .unwrap_or(0)
    }

    /// Total number of Schur summands counted with multiplicity, plus the
    /// constant dimension. Strictly decreases when any single unit is
    /// removed, which is what makes the order well-founded at bounded
    /// degree.
    pub fn summand_count(&self) -> BigUint {
        let mut total = self.constant_dim.clone();
        for m in self.multiplicities.values() {
            total += m;
        }
        total
    }

    fn add_multiplicity(&mut self, shape: Partition, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        if shape.is_empty() {
            self.constant_dim += mult;
            return;
        }
        *self
            .multiplicities
            .entry(shape)
            .or_insert_with(BigUint::zero) += mult;
    }

    /// Direct sum: constant dimensions add, multiplicities add pointwise.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.constant_dim += &other.constant_dim;
        for (shape, mult) in &other.multiplicities {
            out.add_multiplicity(shape.clone(), mult.clone());
        }
        out
    }

    /// Tensor product, expanded bilinearly via Littlewood-Richardson
    /// coefficients. A constant part of dimension c acts by replicating the
    /// other side's summands c times; constant dimensions multiply.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        out.constant_dim = &self.constant_dim * &other.constant_dim;
        if !other.constant_dim.is_zero() {
            for (shape, mult) in &self.multiplicities {
                out.add_multiplicity(shape.clone(), mult * &other.constant_dim);
            }
        }
        if !self.constant_dim.is_zero() {
            for (shape, mult) in &other.multiplicities {
                out.add_multiplicity(shape.clone(), mult * &self.constant_dim);
            }
        }
        for (left, lm) in &self.multiplicities {
            for (right, rm) in &other.multiplicities {
                let pair = lm * rm;
                for outer in partitions_of(left.size() + right.size()) {
                    let coeff = lr_coefficient(left, right, &outer);
                    if !coeff.is_zero() {
                        out.add_multiplicity(outer, coeff * &pair);
                    }
                }
            }
        }
        out
    }

    /// The degree-e part: for e = 0 the constant part alone, otherwise the
    /// summands whose partitions have size exactly e.
    pub fn degree_part(&self, e: usize) -> Self {
        if e == 0 {
            return PolynomialFunctor {
                constant_dim: self.constant_dim.clone(),
                multiplicities: BTreeMap::new(),
            };
        }
        let mut out = Self::zero();
        for (shape, mult) in &self.multiplicities {
            if shape.size() == e {
                out.add_multiplicity(shape.clone(), mult.clone());
            }
        }
        out
    }

    /// The pure part: everything except the constant summand.
    pub fn pure_part(&self) -> Self {
        PolynomialFunctor {
            constant_dim: BigUint::zero(),
            multiplicities: self.multiplicities.clone(),
        }
    }

    /// Shift over a u-dimensional space: precompose the functor with
    /// `V -> K^u + V`. Each Schur summand expands into the summands indexed
    /// by contained partitions, weighted by skew dimensions over `K^u`; the
    /// empty partition's share lands in the constant part, so that
    /// `shift(P, u).dim_at(n) == P.dim_at(u + n)` for all n.
    pub fn shift(&self, u: usize) -> Self {
        if u == 0 {
            return self.clone();
        }
        let mut out = Self::zero();
        out.constant_dim = self.constant_dim.clone();
        for (shape, mult) in &self.multiplicities {
            for sub_size in 0..=shape.size() {
                for inner in partitions_of(sub_size) {
                    if !shape.contains(&inner) {
                        continue;
                    }
                    let factor = skew_schur_dim(shape, &inner, u);
                    if !factor.is_zero() {
                        out.add_multiplicity(inner, factor * mult);
                    }
                }
            }
        }
        out
    }

    /// Dimension of the functor evaluated on an n-dimensional space.
    pub fn dim_at(&self, n: usize) -> BigUint {
        let mut total = self.constant_dim.clone();
        for (shape, mult) in &self.multiplicities {
            total += mult * schur_dim(shape, n);
        }
        total
    }

    /// Position of `self` relative to `other` in the order on polynomial
    /// functors. Non-isomorphic functors are compared at the largest degree
    /// where their decompositions differ: `Smaller` when every multiplicity
    /// of `self` there is at most the matching one of `other`, `Greater`
    /// for the reverse, `Incomparable` otherwise. When all pure parts agree
    /// the constant dimensions decide, as the degree-0 layer.
    pub fn compare(&self, other: &Self) -> OrderVerdict {
        if self == other {
            return OrderVerdict::Isomorphic;
        }
        let top = self.degree().max(other.degree());
        for e in (1..=top).rev() {
            let mine = self.degree_part(e);
            let theirs = other.degree_part(e);
            if mine == theirs {
                continue;
            }
            let shapes: std::collections::BTreeSet<&Partition> = mine
                .multiplicities
                .keys()
                .chain(theirs.multiplicities.keys())
                .collect();
            let mut all_le = true;
            let mut all_ge = true;
            for shape in shapes {
                let a = mine.multiplicity(shape);
                let b = theirs.multiplicity(shape);
                if a > b {
                    all_le = false;
                }
                if a < b {
                    all_ge = false;
                }
            }
            return match (all_le, all_ge) {
                (true, false) => OrderVerdict::Smaller,
                (false, true) => OrderVerdict::Greater,
                _ => OrderVerdict::Incomparable,
            };
        }
        // Pure parts agree and the functors differ, so the constant
        // dimensions decide.
        if self.constant_dim < other.constant_dim {
            OrderVerdict::Smaller
        } else {
            OrderVerdict::Greater
        }
    }
}

impl fmt::Debug for PolynomialFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PolynomialFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.constant_dim.is_zero() {
            write!(f, "{}", self.constant_dim)?;
            wrote = true;
        }
        for (shape, mult) in &self.multiplicities {
            if wrote {
                write!(f, " + ")?;
            }
            if mult.is_one() {
                write!(f, "S{}", shape)?;
            } else {
                write!(f, "{} S{}", mult, shape)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Wire form: `{"const": c, "schur": [[[2,1], 2], ...]}` with partitions as
/// arrays in the deterministic key order. Multiplicities round-trip as plain
/// JSON integers of arbitrary size.
#[derive(Serialize, Deserialize)]
struct FunctorRepr {
    #[serde(rename = "const")]
    constant: serde_json::Number,
    schur: Vec<(Partition, serde_json::Number)>,
}

fn biguint_to_number(v: &BigUint) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("decimal integer is a valid JSON number")
}

fn number_to_biguint<E: serde::de::Error>(n: &serde_json::Number) -> Result<BigUint, E> {
    BigUint::from_str(&n.to_string())
        .map_err(|_| E::custom(format!("expected a nonnegative integer, got {}", n)))
}

impl Serialize for PolynomialFunctor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = FunctorRepr {
            constant: biguint_to_number(&self.constant_dim),
            schur: self
                .multiplicities
                .iter()
                .map(|(p, m)| (p.clone(), biguint_to_number(m)))
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolynomialFunctor {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = FunctorRepr::deserialize(deserializer)?;
        let mut out = PolynomialFunctor::zero();
        out.constant_dim = number_to_biguint(&repr.constant)?;
        for (shape, mult) in repr.schur {
            if shape.is_empty() {
                return Err(serde::de::Error::custom(
                    "the constant part belongs in \"const\", not under an empty partition",
                ));
            }
            let mult = number_to_biguint(&mult)?;
            if mult.is_zero() {
                return Err(serde::de::Error::custom("zero multiplicities are not stored"));
            }
            if !out.multiplicity(&shape).is_zero() {
                return Err(serde::de::Error::custom(format!(
                    "duplicate partition {} in schur list",
                    shape
                )));
            }
            out.add_multiplicity(shape, mult);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn s(parts: &[u32]) -> PolynomialFunctor {
        PolynomialFunctor::schur(Partition::of(parts))
    }

    #[test]
    fn direct_sum_examples() {
        let sym = s(&[2]);
        let alt = s(&[1, 1]);
        assert_eq!(sym.direct_sum(&alt), PolynomialFunctor::schur_weyl(2));
        let p = s(&[3]).direct_sum(&PolynomialFunctor::constant(2));
        assert_eq!(p.direct_sum(&PolynomialFunctor::zero()), p);
        let triple = PolynomialFunctor::schur_with_multiplicity(Partition::of(&[1]), big(3));
        assert_eq!(
            s(&[1]).direct_sum(&PolynomialFunctor::schur_with_multiplicity(
                Partition::of(&[1]),
                big(2)
            )),
            triple
        );
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(s(&[1]).tensor(&s(&[1])), PolynomialFunctor::schur_weyl(2));
        assert_eq!(
            PolynomialFunctor::constant(3).tensor(&s(&[1])),
            PolynomialFunctor::schur_with_multiplicity(Partition::of(&[1]), big(3))
        );
        let squared = s(&[2]).tensor(&s(&[2]));
        let expected = s(&[4]).direct_sum(&s(&[3, 1])).direct_sum(&s(&[2, 2]));
        assert_eq!(squared, expected);
    }

    #[test]
    fn schur_weyl_examples() {
        assert_eq!(PolynomialFunctor::schur_weyl(0), PolynomialFunctor::constant(1));
        let t3 = PolynomialFunctor::schur_weyl(3);
        assert_eq!(t3.multiplicity(&Partition::of(&[3])), big(1));
        assert_eq!(t3.multiplicity(&Partition::of(&[2, 1])), big(2));
        assert_eq!(t3.multiplicity(&Partition::of(&[1, 1, 1])), big(1));
        assert_eq!(t3.dim_at(2), big(8));
    }

    #[test]
    fn degree_part_examples() {
        let t2 = PolynomialFunctor::schur_weyl(2);
        assert_eq!(t2.degree_part(2), t2);
        let mixed = s(&[1]).direct_sum(&s(&[2]));
        assert_eq!(mixed.degree_part(1), s(&[1]));
        assert_eq!(mixed.degree_part(5), PolynomialFunctor::zero());
        let with_const = mixed.direct_sum(&PolynomialFunctor::constant(4));
        assert_eq!(with_const.degree_part(0), PolynomialFunctor::constant(4));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(
            PolynomialFunctor::constant(7).shift(3),
            PolynomialFunctor::constant(7)
        );
        let shifted = s(&[2]).shift(1);
        let expected = PolynomialFunctor::constant(1)
            .direct_sum(&s(&[1]))
            .direct_sum(&s(&[2]));
        assert_eq!(shifted, expected);
        assert_eq!(
            s(&[1]).shift(3),
            PolynomialFunctor::constant(3).direct_sum(&s(&[1]))
        );
        let p = PolynomialFunctor::schur_weyl(3);
        assert_eq!(p.shift(0), p);
    }

    #[test]
    fn shift_dimension_identity_on_tensor_powers() {
        for d in 0..=3 {
            let p = PolynomialFunctor::schur_weyl(d);
            for u in 0..=3 {
                let shifted = p.shift(u);
                for n in 0..=4 {
                    assert_eq!(shifted.dim_at(n), p.dim_at(u + n), "d={} u={} n={}", d, u, n);
                }
            }
        }
    }

    #[test]
    fn dim_examples() {
        assert_eq!(PolynomialFunctor::constant(5).dim_at(100), big(5));
        assert_eq!(s(&[1, 1]).dim_at(1), big(0));
    }

    #[test]
    fn compare_examples() {
        let t2 = PolynomialFunctor::schur_weyl(2);
        assert_eq!(s(&[1, 1]).compare(&t2), OrderVerdict::Smaller);
        assert_eq!(t2.compare(&s(&[1, 1])), OrderVerdict::Greater);
        assert_eq!(t2.compare(&t2), OrderVerdict::Isomorphic);
        // Largest differing degree is 1 here, where 0 <= 1.
        let bigger = s(&[1]).direct_sum(&s(&[2]));
        assert_eq!(s(&[2]).compare(&bigger), OrderVerdict::Smaller);
        // Incomparable at the top degree.
        assert_eq!(s(&[2]).compare(&s(&[1, 1])), OrderVerdict::Incomparable);
        // Constant dimensions are the degree-0 layer.
        let a = s(&[2]).direct_sum(&PolynomialFunctor::constant(1));
        let b = s(&[2]).direct_sum(&PolynomialFunctor::constant(4));
        assert_eq!(a.compare(&b), OrderVerdict::Smaller);
        assert_eq!(b.compare(&a), OrderVerdict::Greater);
    }

    #[test]
    fn serde_round_trip_and_format() {
        let t2 = PolynomialFunctor::schur_weyl(2);
        let json = serde_json::to_string(&t2).unwrap();
        assert_eq!(json, r#"{"const":0,"schur":[[[2],1],[[1,1],1]]}"#);
        let back: PolynomialFunctor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t2);
        assert!(serde_json::from_str::<PolynomialFunctor>(
            r#"{"const":0,"schur":[[[1],0]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<PolynomialFunctor>(
            r#"{"const":0,"schur":[[[1],1],[[1],2]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<PolynomialFunctor>(r#"{"const":-1,"schur":[]}"#).is_err());
    }

    #[test]
    fn large_multiplicities_round_trip() {
        let huge = BigUint::from(u64::MAX) * big(1000) + big(7);
        let p = PolynomialFunctor::schur_with_multiplicity(Partition::of(&[2, 1]), huge.clone());
        let json = serde_json::to_string(&p).unwrap();
        let back: PolynomialFunctor = serde_json::from_str(&json).unwrap();
        assert_eq!(back.multiplicity(&Partition::of(&[2, 1])), huge);
    }
}
