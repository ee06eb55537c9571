//! Rank-2 parameter relations up to unit, and their normal-form steps.
//!
//! A [`Relation2`] records exponents of `x1 = (unit) y1^a y2^b`,
//! `x2 = (unit) y1^c y2^d` with `|ad - bc| = e`. The two operations here are
//! the closed-form normalization of the post-`(a=1, c=0)` shape to
//! `(1, 0; 0, e)` and the value bookkeeping of one paired quadratic
//! transform in the discrete rank-1 case.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::frame::BlowupError;

/// Exponents of a 2x2 monomial relation between parameter systems, units
/// abstracted. Invariant: `|ad - bc| = e` with `e >= 1` and all exponents
/// nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    e: BigInt,
}

impl Relation2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt, e: BigInt) -> Result<Self, BlowupError> {
        for (name, v) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
            if v.is_negative() {
                return Err(BlowupError::MalformedRelation(format!(
                    "exponent {name} = {v} is negative"
                )));
            }
        }
        if e < BigInt::one() {
            return Err(BlowupError::MalformedRelation(format!(
                "e = {e} is not positive"
            )));
        }
        let det = (&a * &d - &b * &c).abs();
        if det != e {
            return Err(BlowupError::MalformedRelation(format!(
                "|ad - bc| = {det} but e = {e}"
            )));
        }
        Ok(Relation2 { a, b, c, d, e })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64, e: i64) -> Result<Self, BlowupError> {
        Self::new(a.into(), b.into(), c.into(), d.into(), e.into())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn e(&self) -> &BigInt {
        &self.e
    }

    /// `x1 = (unit) y1^e, x2 = y2`: the discrete rank-1 shape.
    pub fn is_rank1_shape(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }
}

/// Output of [`rank2_normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedRelation {
    /// Least nonnegative twist of `y1` by `y2` making the exponent of `y2`
    /// in `x1` a multiple of `e`.
    pub r: BigInt,
    /// The matching quadratic-transform exponent on the `x` side.
    pub s: BigInt,
    pub relation: Relation2,
}

/// Normalizes a relation of shape `(a=1, b, c=0, d=e)` to `(1, 0; 0, e)`.
///
/// `r` is the least nonnegative integer with `e | (b + r)` and
/// `s = (b + r) / e`; both are closed-form, so this always terminates in one
/// composite step and `|ad - bc| = e` is preserved.
pub fn rank2_normalize(rel: &Relation2) -> Result<NormalizedRelation, BlowupError> {
    if !rel.a.is_one() || !rel.c.is_zero() || rel.d != rel.e {
        return Err(BlowupError::MalformedRelation(format!(
            "expected shape (a=1, b, c=0, d=e), got (a={}, b={}, c={}, d={}, e={})",
            rel.a, rel.b, rel.c, rel.d, rel.e
        )));
    }
    let r = (-&rel.b).mod_floor(&rel.e);
    let s = (&rel.b + &r) / &rel.e;
    let relation = Relation2::new(
        BigInt::one(),
        BigInt::zero(),
        BigInt::zero(),
        rel.e.clone(),
        rel.e.clone(),
    )?;
    Ok(NormalizedRelation { r, s, relation })
}

/// State of the discrete rank-1 iteration: a relation of shape
/// `x1 = (unit) y1^e, x2 = y2` together with the current value of `x2`
/// (always a multiple of `e`, since the small value group is `eZ`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank1State {
    pub relation: Relation2,
    pub omega_x2: BigInt,
}

/// One paired quadratic transform at the value level: both sides divide
/// their second parameter by the first, so `omega(x2)` drops by
/// `omega(x1) = e` and the shape of the relation is unchanged. The residue
/// construction of the fresh second parameter is abstracted away.
pub fn paired_step_rank1(
    relation: &Relation2,
    omega_x2: &BigInt,
) -> Result<Rank1State, BlowupError> {
    if !relation.is_rank1_shape() {
        return Err(BlowupError::MalformedRelation(format!(
            "expected shape (a=e, b=0, c=0, d=1), got (a={}, b={}, c={}, d={})",
            relation.a, relation.b, relation.c, relation.d
        )));
    }
    let e = relation.e();
    if !omega_x2.is_positive() {
        return Err(BlowupError::MalformedRelation(format!(
            "omega(x2) = {omega_x2} must be positive"
        )));
    }
    if !(omega_x2 % e).is_zero() {
        return Err(BlowupError::MalformedRelation(format!(
            "omega(x2) = {omega_x2} is not a multiple of e = {e}"
        )));
    }
    Ok(Rank1State {
        relation: relation.clone(),
        omega_x2: omega_x2 - e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn normalize_trivial() {
        let rel = Relation2::from_i64(1, 0, 0, 1, 1).unwrap();
        let out = rank2_normalize(&rel).unwrap();
        assert_eq!(out.r, big(0));
        assert_eq!(out.s, big(0));
        assert_eq!(out.relation, Relation2::from_i64(1, 0, 0, 1, 1).unwrap());
    }

    #[test]
    fn normalize_examples() {
        let out = rank2_normalize(&Relation2::from_i64(1, 3, 0, 2, 2).unwrap()).unwrap();
        assert_eq!((out.r, out.s), (big(1), big(2)));

        let out = rank2_normalize(&Relation2::from_i64(1, 4, 0, 2, 2).unwrap()).unwrap();
        assert_eq!((out.r, out.s), (big(0), big(2)));
    }

    #[test]
    fn normalize_r_is_minimal() {
        for b in 0..=12i64 {
            for e in 1..=6i64 {
                let rel = Relation2::from_i64(1, b, 0, e, e).unwrap();
                let out = rank2_normalize(&rel).unwrap();
                let r = i64::try_from(&out.r).unwrap();
                assert!((b + r) % e == 0);
                for smaller in 0..r {
                    assert!((b + smaller) % e != 0);
                }
                let det = (out.relation.a() * out.relation.d()
                    - out.relation.b() * out.relation.c())
                .abs();
                assert_eq!(&det, rel.e());
            }
        }
    }

    #[test]
    fn normalize_rejects_other_shapes() {
        let rel = Relation2::from_i64(2, 1, 1, 1, 1).unwrap();
        assert!(matches!(
            rank2_normalize(&rel),
            Err(BlowupError::MalformedRelation(_))
        ));
    }

    #[test]
    fn relation_invariant_is_checked() {
        assert!(Relation2::from_i64(1, 0, 0, 2, 3).is_err());
        assert!(Relation2::from_i64(1, -1, 0, 2, 2).is_err());
        assert!(Relation2::from_i64(1, 0, 0, 2, 0).is_err());
    }

    #[test]
    fn paired_step_examples() {
        // e = 1, s = 1: one subtraction, shape unchanged.
        let rel = Relation2::from_i64(1, 0, 0, 1, 1).unwrap();
        let out = paired_step_rank1(&rel, &big(1)).unwrap();
        assert_eq!(out.relation, rel);
        assert_eq!(out.omega_x2, big(0));

        // e = 2, s = 3: omega(x2) goes 6 -> 4.
        let rel = Relation2::from_i64(2, 0, 0, 1, 2).unwrap();
        let out = paired_step_rank1(&rel, &big(6)).unwrap();
        assert_eq!(out.omega_x2, big(4));

        // Not a multiple of e.
        assert!(matches!(
            paired_step_rank1(&rel, &big(5)),
            Err(BlowupError::MalformedRelation(_))
        ));
    }
}
