//! Closed forms for the order-1 code over the even cycle C_{2k}, plus the
//! torus distance and regularity formulas used to cross-check it.
//!
//! Everything is computed in arbitrary precision; a division that is
//! supposed to be exact returns [`Error::InexactDivision`] if it is not.

use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Signed, Zero};

use crate::gfq::{Elem, FiniteField};
use crate::{Error, Result};

/// Which support class attains the maximum number of zeros on X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Max is `(q-1)^{2k-3}`; distance `(q-1)^{2k-3}(q-2)`.
    IncompleteDominates,
    /// Max is attained by forms with all coefficients nonzero.
    CompleteDominates,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::IncompleteDominates => "incomplete-dominates",
            Branch::CompleteDominates => "complete-dominates",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_cycle(k: u32, q: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::OutOfRange("k must be at least 2"));
    }
    if q < 3 {
        return Err(Error::OutOfRange("q must be at least 3"));
    }
    Ok(())
}

fn big(v: u32) -> BigInt {
    BigInt::from(v)
}

fn power(base: u32, exp: u32) -> BigInt {
    Pow::pow(&big(base), exp)
}

fn exact_div(num: BigInt, den: BigInt, what: &'static str) -> Result<BigInt> {
    if (&num % &den).is_zero() {
        Ok(num / den)
    } else {
        Err(Error::InexactDivision(what))
    }
}

fn to_unsigned(v: BigInt, what: &'static str) -> Result<BigUint> {
    v.to_biguint().ok_or(Error::OutOfRange(what))
}

/// Length (q-1)^{2k-2} of the code over C_{2k}.
pub fn cycle_length(k: u32, q: u32) -> Result<BigUint> {
    check_cycle(k, q)?;
    to_unsigned(power(q - 1, 2 * k - 2), "cycle_length")
}

/// Dimension 2k of the order-1 code over C_{2k}.
pub fn cycle_dimension(k: u32) -> u32 {
    2 * k
}

/// Branch as listed in the closed form for the distance: the first case
/// holds when k = 4 and q > 3, or k >= 5.
pub fn theorem_branch(k: u32, q: u32) -> Result<Branch> {
    check_cycle(k, q)?;
    Ok(if (k == 4 && q > 3) || k >= 5 {
        Branch::IncompleteDominates
    } else {
        Branch::CompleteDominates
    })
}

/// Δ(k,q) = (q-1)^{2k-2} - q^k (q-2).
pub fn delta(k: u32, q: u32) -> Result<BigInt> {
    check_cycle(k, q)?;
    Ok(power(q - 1, 2 * k - 2) - power(q, k) * big(q - 2))
}

/// Branch selected by the sign of Δ(k,q).
pub fn branch_predicate(k: u32, q: u32) -> Result<Branch> {
    Ok(if delta(k, q)?.is_positive() {
        Branch::IncompleteDominates
    } else {
        Branch::CompleteDominates
    })
}

/// Minimum distance of C_X(1) over C_{2k}; the branch comes from
/// [`theorem_branch`], not from Δ.
pub fn cycle_min_distance(k: u32, q: u32) -> Result<BigUint> {
    let value = match theorem_branch(k, q)? {
        Branch::IncompleteDominates => power(q - 1, 2 * k - 3) * big(q - 2),
        Branch::CompleteDominates => exact_div(
            power(q - 1, 2 * k) - power(q, k) * big(q - 2) - 1,
            big(q) * big(q - 1),
            "cycle_min_distance",
        )?,
    };
    to_unsigned(value, "cycle_min_distance")
}

/// z(g) for `g = Σ_{i<r} β_i x_i x_{i+1}` with nonzero β, over (F*)^{2k}:
/// `q^{-1}[(q-1)^r + (-1)^{r-1}(q-1)^2](q-1)^{2k-r}`.
pub fn path_zero_count(r: u32, q: u32, k: u32) -> Result<BigUint> {
    check_cycle(k, q)?;
    if r < 2 || r > 2 * k {
        return Err(Error::OutOfRange("path length r must lie in [2, 2k]"));
    }
    let sign = if r % 2 == 1 { BigInt::from(1) } else { BigInt::from(-1) };
    let bracket = power(q - 1, r) + sign * power(q - 1, 2);
    let value = exact_div(bracket * power(q - 1, 2 * k - r), big(q), "path_zero_count")?;
    to_unsigned(value, "path_zero_count")
}

/// Largest `|Z(F) ∩ X|` over nonzero linear forms with a zero coefficient.
pub fn incomplete_max(k: u32, q: u32) -> Result<BigUint> {
    check_cycle(k, q)?;
    to_unsigned(power(q - 1, 2 * k - 3), "incomplete_max")
}

/// Largest `|Z(F) ∩ X|` over linear forms with all coefficients nonzero:
/// `((q-1)^{2k-1} + q^k (q-2) + 1) / (q(q-1))`.
pub fn complete_max(k: u32, q: u32) -> Result<BigUint> {
    check_cycle(k, q)?;
    let value = exact_div(
        power(q - 1, 2 * k - 1) + power(q, k) * big(q - 2) + 1,
        big(q) * big(q - 1),
        "complete_max",
    )?;
    to_unsigned(value, "complete_max")
}

/// Whether `α_1 α_3 ⋯ α_{2k-1} = (-1)^k α_2 α_4 ⋯ α_{2k}` in the field,
/// the condition for a complete form to attain [`complete_max`].
pub fn equality_condition(field: &FiniteField, alphas: &[Elem]) -> Result<bool> {
    if alphas.len() % 2 == 1 {
        return Err(Error::OddLength(alphas.len()));
    }
    if alphas.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroCoefficient);
    }
    let k = alphas.len() / 2;
    let odd = alphas.iter().step_by(2).fold(Elem::ONE, |acc, &a| field.mul(acc, a));
    let even = alphas.iter().skip(1).step_by(2).fold(Elem::ONE, |acc, &a| field.mul(acc, a));
    let rhs = if k % 2 == 0 { even } else { field.neg(even) };
    Ok(odd == rhs)
}

/// Minimum distance of the degree-d code on the full torus T^{s-1}:
/// `(q-1)^{s-(j+2)} (q-1-ℓ)` where `d = j(q-2) + ℓ`, `j >= 0`, `1 <= ℓ <= q-2`.
/// Requires `1 <= d <= (q-2)(s-1)`; at the upper end the code is the whole
/// ambient space and the value is 1.
pub fn torus_min_distance(s: u32, q: u32, d: u32) -> Result<BigUint> {
    if q < 3 {
        return Err(Error::OutOfRange("q must be at least 3"));
    }
    if s < 2 || d == 0 || d as u64 > (q as u64 - 2) * (s as u64 - 1) {
        return Err(Error::OutOfRange("degree must satisfy 1 <= d <= (q-2)(s-1)"));
    }
    let j = (d - 1) / (q - 2);
    let l = d - j * (q - 2);
    to_unsigned(power(q - 1, s - j - 2) * big(q - 1 - l), "torus_min_distance")
}

/// Regularity index (k-1)(q-2) of the point set of C_{2k}.
pub fn even_cycle_regularity(k: u32, q: u32) -> Result<u64> {
    check_cycle(k, q)?;
    Ok((k as u64 - 1) * (q as u64 - 2))
}

/// Regularity index (s-1)(q-2) of the full torus T^{s-1}.
pub fn torus_regularity(s: u32, q: u32) -> Result<u64> {
    if s == 0 || q < 3 {
        return Err(Error::OutOfRange("need s >= 1 and q >= 3"));
    }
    Ok((s as u64 - 1) * (q as u64 - 2))
}

/// Every closed-form parameter of C_X(1) over C_{2k} and GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePrediction {
    pub k: u32,
    pub q: u32,
    pub length: BigUint,
    pub dimension: u32,
    pub min_distance: BigUint,
    pub branch: Branch,
    /// Branch by the sign of Δ; equal to `branch` whenever the closed form is coherent.
    pub delta_branch: Branch,
    pub delta: BigInt,
    pub incomplete_max: BigUint,
    pub complete_max: BigUint,
    pub regularity: u64,
}

pub fn predict(k: u32, q: u32) -> Result<CyclePrediction> {
    Ok(CyclePrediction {
        k,
        q,
        length: cycle_length(k, q)?,
        dimension: cycle_dimension(k),
        min_distance: cycle_min_distance(k, q)?,
        branch: theorem_branch(k, q)?,
        delta_branch: branch_predicate(k, q)?,
        delta: delta(k, q)?,
        incomplete_max: incomplete_max(k, q)?,
        complete_max: complete_max(k, q)?,
        regularity: even_cycle_regularity(k, q)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn min_distance_values() {
        assert_eq!(cycle_min_distance(2, 3), Ok(u(1)));
        for q in [3u64, 4, 5, 7, 8, 9, 11] {
            assert_eq!(cycle_min_distance(2, q as u32), Ok(u((q - 2) * (q - 2))));
        }
        assert_eq!(cycle_min_distance(4, 3), Ok(u(29)));
        assert_eq!(cycle_min_distance(5, 3), Ok(u(128)));
        assert_eq!(cycle_min_distance(3, 3), Ok(u(6)));
        assert!(cycle_min_distance(1, 3).is_err());
        assert!(cycle_min_distance(2, 2).is_err());
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(4, 3), Ok(BigInt::from(-17)));
        assert_eq!(delta(4, 4), Ok(BigInt::from(217)));
        assert_eq!(delta(5, 3), Ok(BigInt::from(13)));
        for q in 3..30 {
            assert!(delta(2, q).unwrap().is_negative());
        }
    }

    #[test]
    fn branches() {
        assert_eq!(branch_predicate(4, 3), Ok(Branch::CompleteDominates));
        assert_eq!(branch_predicate(5, 3), Ok(Branch::IncompleteDominates));
        assert_eq!(branch_predicate(3, 7), Ok(Branch::CompleteDominates));
        assert_eq!(theorem_branch(4, 4), Ok(Branch::IncompleteDominates));
        assert_eq!(Branch::CompleteDominates.to_string(), "complete-dominates");
    }

    #[test]
    fn path_counts() {
        for q in [3, 4, 5] {
            assert_eq!(path_zero_count(2, q, 3), Ok(u(0)));
        }
        assert_eq!(path_zero_count(3, 3, 2), Ok(u(8)));
        assert_eq!(path_zero_count(4, 3, 2), Ok(u(4)));
        assert!(path_zero_count(1, 3, 2).is_err());
        assert!(path_zero_count(5, 3, 2).is_err());
    }

    #[test]
    fn maxima() {
        assert_eq!(incomplete_max(2, 3), Ok(u(2)));
        assert_eq!(complete_max(2, 3), Ok(u(3)));
        assert_eq!(complete_max(3, 3), Ok(u(10)));
    }

    #[test]
    fn equality_conditions() {
        let f3 = FiniteField::new(3, 1).unwrap();
        let e = |v: &[u16]| v.iter().map(|&x| Elem::new(x)).collect::<Vec<_>>();
        assert_eq!(equality_condition(&f3, &e(&[1, 1, 1, 1])), Ok(true));
        assert_eq!(equality_condition(&f3, &e(&[1, 1, 1, 1, 1, 1])), Ok(false));
        assert_eq!(equality_condition(&f3, &e(&[1, 1, 1, 2])), Ok(false));
        assert_eq!(equality_condition(&f3, &e(&[1, 1, 0, 2])), Err(Error::ZeroCoefficient));
        assert_eq!(equality_condition(&f3, &e(&[1, 1, 1])), Err(Error::OddLength(3)));
    }

    #[test]
    fn torus_values() {
        assert_eq!(torus_min_distance(2, 4, 1), Ok(u(2)));
        assert_eq!(torus_min_distance(3, 3, 1), Ok(u(2)));
        assert_eq!(torus_min_distance(2, 5, 2), Ok(u(2)));
        assert_eq!(torus_min_distance(2, 5, 3), Ok(u(1)));
        assert_eq!(torus_min_distance(2, 3, 1), Ok(u(1)));
        assert!(torus_min_distance(2, 5, 4).is_err());
        assert!(torus_min_distance(2, 5, 0).is_err());
        for q in [3u32, 4, 5, 7] {
            let t = torus_min_distance(2, q, 1).unwrap();
            assert_eq!(&t * &t, cycle_min_distance(2, q).unwrap());
        }
    }

    #[test]
    fn regularity_values() {
        assert_eq!(even_cycle_regularity(2, 3), Ok(1));
        assert_eq!(even_cycle_regularity(3, 3), Ok(2));
        assert_eq!(even_cycle_regularity(2, 4), Ok(2));
        assert_eq!(torus_regularity(2, 4), Ok(2));
    }

    #[test]
    fn prediction_bundle() {
        let p = predict(4, 4).unwrap();
        assert_eq!(p.length, u(729));
        assert_eq!(p.dimension, 8);
        assert_eq!(p.min_distance, u(486));
        assert_eq!(p.branch, p.delta_branch);
        assert_eq!(&p.length - &p.incomplete_max.max(p.complete_max.clone()), p.min_distance);
    }
}
