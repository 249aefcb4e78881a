//! Exact local and global Campana membership.
//!
//! Local multiplicities are colengths: v_p of the form evaluated on primitive
//! coordinates. The global check is finite because only primes dividing some
//! f_i(x) can give a positive multiplicity.

use crate::orbifold::{HyperplaneOrbifold, LinearForm, Multiplicity, ProjectivePoint, QuadraticOrbifoldP1};
use crate::padic::{factor, quadratic_character, val_int_unchecked, Valuation};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::{Integer, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

/// Per-component multiplicities at one prime plus the membership verdict.
#[derive(Debug, Clone, Serialize)]
pub struct LocalVerdict {
    pub is_campana: bool,
    pub multiplicities: Vec<Valuation>,
}

/// v_p(f(x)) on primitive coordinates; ∞ iff the point lies on the
/// hyperplane.
pub fn intersection_multiplicity(
    point: &ProjectivePoint,
    form: &LinearForm,
    prime: u64,
) -> Valuation {
    val_int_unchecked(&form.eval(point.coords()), prime)
}

fn satisfies(n_v: Valuation, m: Multiplicity) -> bool {
    match m {
        Multiplicity::Infinity => n_v == Valuation::Finite(0),
        Multiplicity::Finite(m) => n_v.zero_or_at_least(m as i64),
    }
}

/// Local membership at one prime, per component: n_v = 0, or n_v ≥ m_i
/// (with n_v = ∞ allowed) for finite m_i; n_v = 0 exactly for m_i = ∞.
pub fn is_local_campana(
    point: &ProjectivePoint,
    orb: &HyperplaneOrbifold,
    prime: u64,
) -> Result<LocalVerdict> {
    if point.dim() != orb.n() {
        return Err(Error::DimensionMismatch(format!(
            "point in P^{} on an orbifold over P^{}",
            point.dim(),
            orb.n()
        )));
    }
    let multiplicities: Vec<Valuation> = orb
        .forms()
        .iter()
        .map(|f| intersection_multiplicity(point, f, prime))
        .collect();
    let is_campana = multiplicities
        .iter()
        .zip(orb.multiplicities())
        .all(|(&n_v, &m)| satisfies(n_v, m));
    Ok(LocalVerdict {
        is_campana,
        multiplicities,
    })
}

/// Global membership: local at every prime outside S. Decided by factoring
/// the nonzero form values; all other primes give multiplicity zero.
pub fn is_global_campana(
    point: &ProjectivePoint,
    orb: &HyperplaneOrbifold,
    exclude: &BTreeSet<u64>,
) -> Result<bool> {
    if point.dim() != orb.n() {
        return Err(Error::DimensionMismatch(format!(
            "point in P^{} on an orbifold over P^{}",
            point.dim(),
            orb.n()
        )));
    }
    for (f, &m) in orb.forms().iter().zip(orb.multiplicities()) {
        let value = f.eval(point.coords());
        if value.is_zero() {
            // On the divisor: multiplicity ∞ at every prime. Fine for finite
            // m, fatal for m = ∞ (some prime always lies outside S).
            if m == Multiplicity::Infinity {
                return Ok(false);
            }
            continue;
        }
        match m {
            Multiplicity::Infinity => {
                for (p, _) in factor(&value)? {
                    if !p.to_u64().map(|v| exclude.contains(&v)).unwrap_or(false) {
                        return Ok(false);
                    }
                }
            }
            Multiplicity::Finite(m) => {
                for (p, e) in factor(&value)? {
                    if p.to_u64().map(|v| exclude.contains(&v)).unwrap_or(false) {
                        continue;
                    }
                    if (e as i64) < m as i64 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Factorization type of x² − a over Q_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SplitType {
    Split,
    Inert,
    Ramified,
}

/// Split/Inert/Ramified for a non-square a: the residue symbol for odd p ∤ a,
/// the mod-8 class of a for p = 2, and Ramified when p | a.
pub fn split_type(a: &BigInt, prime: u64) -> Result<SplitType> {
    if crate::orbifold::is_perfect_square(a) {
        return Err(Error::SquareParameter(a.to_string()));
    }
    if (a % BigInt::from(prime)).is_zero() {
        return Ok(SplitType::Ramified);
    }
    if prime == 2 {
        let r = a.mod_floor(&BigInt::from(8)).to_u64().unwrap();
        return Ok(match r {
            1 => SplitType::Split,
            5 => SplitType::Inert,
            _ => SplitType::Ramified,
        });
    }
    match quadratic_character(a, prime)? {
        1 => Ok(SplitType::Split),
        -1 => Ok(SplitType::Inert),
        _ => unreachable!("p divides a was handled above"),
    }
}

/// Local membership for the quadratic-point orbifold on P^1: with
/// q = v_p(x_0² − a x_1²) on primitive coordinates, membership is
/// q ∈ {0} ∪ Z_{≥m} ∪ {∞} at split/inert primes and q ∈ {0} ∪ Z_{≥2m} ∪ {∞}
/// at ramified ones.
pub fn is_local_campana_quad(
    point: &ProjectivePoint,
    orb: &QuadraticOrbifoldP1,
    prime: u64,
) -> Result<bool> {
    if point.dim() != 1 {
        return Err(Error::DimensionMismatch(format!(
            "quadratic orbifold lives on P^1, point is in P^{}",
            point.dim()
        )));
    }
    let q = val_int_unchecked(&orb.norm_form(point.coords()), prime);
    let threshold = match split_type(orb.a(), prime)? {
        SplitType::Split | SplitType::Inert => orb.m() as i64,
        SplitType::Ramified => 2 * orb.m() as i64,
    };
    Ok(q.zero_or_at_least(threshold))
}

/// Same verdict, plus the norm valuation, for transcripts.
pub fn local_quad_verdict(
    point: &ProjectivePoint,
    orb: &QuadraticOrbifoldP1,
    prime: u64,
) -> Result<(bool, Valuation)> {
    let ok = is_local_campana_quad(point, orb, prime)?;
    Ok((ok, val_int_unchecked(&orb.norm_form(point.coords()), prime)))
}

/// Global membership for the quadratic orbifold outside an excluded set:
/// factor the norm and check each prime.
pub fn is_global_campana_quad(
    point: &ProjectivePoint,
    orb: &QuadraticOrbifoldP1,
    exclude: &BTreeSet<u64>,
) -> Result<bool> {
    let norm = orb.norm_form(point.coords());
    debug_assert!(!norm.is_zero(), "a is a non-square");
    for (p, e) in factor(&norm)? {
        let Some(p64) = p.to_u64() else {
            // Split and inert both need ≥ m; only ramified primes (dividing
            // a) need ≥ 2m, and those are small.
            if (e as i64) < orb.m() as i64 {
                return Ok(false);
            }
            continue;
        };
        if exclude.contains(&p64) {
            continue;
        }
        let threshold = match split_type(orb.a(), p64)? {
            SplitType::Split | SplitType::Inert => orb.m() as i64,
            SplitType::Ramified => 2 * orb.m() as i64,
        };
        if (e as i64) < threshold {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::Multiplicity::{Finite, Infinity};

    fn pt(c: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_i64s(c).unwrap()
    }

    fn std_orb(n: usize, ms: &[u32]) -> HyperplaneOrbifold {
        HyperplaneOrbifold::standard(n, ms.iter().map(|&m| Finite(m)).collect()).unwrap()
    }

    #[test]
    fn intersection_multiplicity_examples() {
        let x0 = LinearForm::coordinate(1, 0);
        assert_eq!(
            intersection_multiplicity(&pt(&[4, 1]), &x0, 2),
            Valuation::Finite(2)
        );
        assert_eq!(
            intersection_multiplicity(&pt(&[0, 1]), &x0, 5),
            Valuation::Infinity
        );
        let sum = LinearForm::sum(2);
        assert_eq!(
            intersection_multiplicity(&pt(&[1, 1, 1]), &sum, 3),
            Valuation::Finite(1)
        );
    }

    #[test]
    fn local_membership_examples() {
        // [1,…,1] at a coordinate-forms arrangement: all multiplicities 0.
        let orb = std_orb(2, &[2, 3, 5]);
        assert!(is_local_campana(&pt(&[1, 1, 1]), &orb, 7).unwrap().is_campana);

        let orb = std_orb(1, &[2]);
        assert!(!is_local_campana(&pt(&[2, 1]), &orb, 2).unwrap().is_campana);
        assert!(is_local_campana(&pt(&[4, 1]), &orb, 2).unwrap().is_campana);
    }

    #[test]
    fn sum_form_multiplicity_is_real() {
        // v_3(1+1+1) = 1 < 2: the all-ones point genuinely fails the sum
        // component of the full standard arrangement on P^2 at p = 3.
        let orb = std_orb(2, &[2, 2, 2, 2]);
        let verdict = is_local_campana(&pt(&[1, 1, 1]), &orb, 3).unwrap();
        assert_eq!(verdict.multiplicities[3], Valuation::Finite(1));
        assert!(!verdict.is_campana);
    }

    #[test]
    fn global_membership_examples() {
        let none = BTreeSet::new();
        let orb = std_orb(2, &[2, 2, 2]);
        assert!(is_global_campana(&pt(&[1, 1, 1]), &orb, &none).unwrap());

        let orb = std_orb(1, &[3]);
        assert!(is_global_campana(&pt(&[8, 1]), &orb, &none).unwrap());
        assert!(!is_global_campana(&pt(&[12, 1]), &orb, &none).unwrap());
    }

    #[test]
    fn zero_divisor_accepts_everything() {
        let orb = HyperplaneOrbifold::new(2, vec![], vec![]).unwrap();
        assert!(is_global_campana(&pt(&[30, 77, 1]), &orb, &BTreeSet::new()).unwrap());
    }

    #[test]
    fn infinite_multiplicity_means_integral() {
        let orb = HyperplaneOrbifold::standard(1, vec![Infinity]).unwrap();
        let none = BTreeSet::new();
        assert!(is_global_campana(&pt(&[1, 5]), &orb, &none).unwrap());
        assert!(!is_global_campana(&pt(&[3, 5]), &orb, &none).unwrap());
        let s3: BTreeSet<u64> = [3].into_iter().collect();
        assert!(is_global_campana(&pt(&[3, 5]), &orb, &s3).unwrap());
        // on the divisor: never integral
        assert!(!is_global_campana(&pt(&[0, 1]), &orb, &none).unwrap());
    }

    #[test]
    fn split_type_examples() {
        let a = BigInt::from(2);
        assert_eq!(split_type(&a, 7).unwrap(), SplitType::Split);
        assert_eq!(split_type(&a, 5).unwrap(), SplitType::Inert);
        assert_eq!(split_type(&a, 2).unwrap(), SplitType::Ramified);
        // mod-8 classification at p = 2
        assert_eq!(split_type(&BigInt::from(17), 2).unwrap(), SplitType::Split);
        assert_eq!(split_type(&BigInt::from(5), 2).unwrap(), SplitType::Inert);
        assert_eq!(split_type(&BigInt::from(-1), 2).unwrap(), SplitType::Ramified);
    }

    #[test]
    fn quad_membership_examples() {
        let orb = QuadraticOrbifoldP1::new(BigInt::from(2), 3).unwrap();
        assert!(!is_local_campana_quad(&pt(&[3, 1]), &orb, 7).unwrap());

        let orb = QuadraticOrbifoldP1::new(BigInt::from(2), 2).unwrap();
        assert!(is_local_campana_quad(&pt(&[1, 1]), &orb, 7).unwrap());

        let orb = QuadraticOrbifoldP1::new(BigInt::from(-1), 3).unwrap();
        assert!(!is_local_campana_quad(&pt(&[1, 1]), &orb, 2).unwrap());
    }
}
