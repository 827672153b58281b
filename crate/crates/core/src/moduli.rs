//! Counting configurations up to rotation.
//!
//! Rotating the plane by a `(d-1)`-st root of unity advances every index
//! by 2 modulo `2d - 2`. The orbit count is obtained by Burnside's lemma
//! over the explicit enumeration and cross-checked by partitioning into
//! orbits with a canonical representative. The logarithmic Pólya series in
//! `G(z)` is evaluated separately and reported next to it; its values do
//! not coincide with the orbit counts.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bracket::render;
use crate::counting::c_total;
use crate::enumerate::enumerate;
use crate::error::{domain, Result};
use crate::model::{index_count, Pair, PairingConfig};

/// Largest degree for which orbit counts enumerate explicitly.
pub const BURNSIDE_BOUND: usize = 8;

/// Shifts every index by `2m` modulo `2d - 2`.
pub fn rotate(config: &PairingConfig, m: i64) -> Result<PairingConfig> {
    let d = config.degree();
    if d < 2 {
        return Err(domain("rotation needs degree at least 2"));
    }
    let n = index_count(d) as i64;
    let shift = (2 * m).rem_euclid(n) as usize;
    let n = n as usize;
    let pairs = config
        .pairs()
        .iter()
        .map(|p| Pair::new((p.low + shift) % n, (p.high + shift) % n, p.kind));
    PairingConfig::new(d, pairs)
}

/// Lexicographically least rendered string over all rotations.
pub fn canonical_form(config: &PairingConfig) -> Result<String> {
    let d = config.degree();
    (0..d as i64 - 1)
        .map(|m| rotate(config, m).map(|c| render(&c)))
        .try_fold(None::<String>, |best, s| {
            let s = s?;
            Ok(Some(match best {
                Some(b) if b <= s => b,
                _ => s,
            }))
        })
        .map(|s| s.expect("group is nonempty"))
}

fn check_range(d: i64, bound: usize) -> Result<usize> {
    match usize::try_from(d) {
        Ok(du) if (2..=bound).contains(&du) => Ok(du),
        _ => Err(domain(format!(
            "orbit counting supports degrees 2..={bound}, got {d}"
        ))),
    }
}

/// Orbit count by Burnside's lemma, for `2 <= d <= bound`.
pub fn burnside_count_bounded(d: i64, bound: usize) -> Result<BigUint> {
    let du = check_range(d, bound)?;
    let order = du - 1;
    let mut fixed = vec![0u64; order];
    for config in enumerate(du)? {
        fixed[0] += 1;
        for (m, slot) in fixed.iter_mut().enumerate().skip(1) {
            if rotate(&config, m as i64)? == config {
                *slot += 1;
            }
        }
    }
    let sum: u64 = fixed.iter().sum();
    assert_eq!(
        sum % order as u64,
        0,
        "fixed-point total not divisible by the group order"
    );
    Ok(BigUint::from(sum / order as u64))
}

/// Orbit count by Burnside's lemma, for `2 <= d <= BURNSIDE_BOUND`.
pub fn burnside_count(d: i64) -> Result<BigUint> {
    burnside_count_bounded(d, BURNSIDE_BOUND)
}

/// Orbit count by collecting canonical representatives.
pub fn orbit_count_by_canonical_form(d: i64) -> Result<BigUint> {
    let du = check_range(d, BURNSIDE_BOUND)?;
    let mut reps = BTreeSet::new();
    for config in enumerate(du)? {
        reps.insert(canonical_form(&config)?);
    }
    Ok(BigUint::from(reps.len()))
}

/// Euler's totient by trial division.
pub fn euler_totient(k: i64) -> Result<u64> {
    if k < 1 {
        return Err(domain(format!("totient needs k >= 1, got {k}")));
    }
    let mut n = k as u64;
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    Ok(phi)
}

/// Which coefficient of the Pólya series is read off for degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyaConvention {
    /// `[z^{d-1}]`
    ZPowDMinus1,
    /// `[z^d]`
    ZPowD,
}

impl PolyaConvention {
    pub fn exponent(self, d: usize) -> usize {
        match self {
            PolyaConvention::ZPowDMinus1 => d - 1,
            PolyaConvention::ZPowD => d,
        }
    }
}

/// `[w^1 ..= w^max] log(1 / (1 - G(w)))`, index 0 unused.
fn log_series(max: usize) -> Result<Vec<BigRational>> {
    let mut g = vec![BigRational::zero(); max + 1];
    for (k, slot) in g.iter_mut().enumerate().skip(1) {
        *slot = BigRational::from_integer(BigInt::from(c_total(k as i64)?));
    }
    let mut out = vec![BigRational::zero(); max + 1];
    let mut power = g.clone();
    for j in 1..=max {
        let inv = BigRational::new(BigInt::one(), BigInt::from(j));
        for (o, p) in out.iter_mut().zip(&power) {
            *o += p * &inv;
        }
        let mut next = vec![BigRational::zero(); max + 1];
        for (a, pa) in power.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, gb) in g
                .iter()
                .enumerate()
                .take(max + 1 - a)
                .filter(|(_, v)| !v.is_zero())
            {
                next[a + b] += pa * gb;
            }
        }
        power = next;
    }
    Ok(out)
}

/// A coefficient of `sum_{k>=1} (phi(k)/k) log(1 / (1 - G(z^k)))`.
pub fn polya_coefficient(d: i64, convention: PolyaConvention) -> Result<BigRational> {
    if d < 2 {
        return Err(domain("Pólya series needs degree at least 2"));
    }
    let n = convention.exponent(d as usize);
    let log = log_series(n)?;
    let mut sum = BigRational::zero();
    for k in (1..=n).filter(|k| n.is_multiple_of(*k)) {
        let weight = BigRational::new(BigInt::from(euler_totient(k as i64)?), BigInt::from(k));
        sum += weight * &log[n / k];
    }
    Ok(sum)
}

/// Orbit counts for one degree next to both Pólya coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliReport {
    pub degree: usize,
    /// `None` beyond [`BURNSIDE_BOUND`].
    pub burnside: Option<BigUint>,
    pub polya_d_minus_1: BigRational,
    pub polya_d: BigRational,
}

impl ModuliReport {
    pub fn build(d: i64) -> Result<ModuliReport> {
        let degree = check_range(d, usize::MAX)?;
        let burnside = if degree <= BURNSIDE_BOUND {
            Some(burnside_count(d)?)
        } else {
            None
        };
        Ok(ModuliReport {
            degree,
            burnside,
            polya_d_minus_1: polya_coefficient(d, PolyaConvention::ZPowDMinus1)?,
            polya_d: polya_coefficient(d, PolyaConvention::ZPowD)?,
        })
    }

    /// True when neither Pólya coefficient equals the Burnside count.
    pub fn discrepancy(&self) -> bool {
        match &self.burnside {
            Some(b) => {
                let b = BigRational::from_integer(BigInt::from(b.clone()));
                b != self.polya_d_minus_1 && b != self.polya_d
            }
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::parse;

    #[test]
    fn rotate_example() {
        let c = parse("(01)23").unwrap();
        assert_eq!(render(&rotate(&c, 1).unwrap()), "01(23)");
        assert_eq!(rotate(&c, 0).unwrap(), c);
        assert_eq!(rotate(&c, -1).unwrap(), rotate(&c, 1).unwrap());
        let single = PairingConfig::all_unpaired(1).unwrap();
        assert!(rotate(&single, 1).is_err());
    }

    #[test]
    fn group_law() {
        for c in enumerate(5).unwrap() {
            for a in 0..4 {
                for b in 0..4 {
                    let lhs = rotate(&rotate(&c, a).unwrap(), b).unwrap();
                    assert_eq!(lhs, rotate(&c, a + b).unwrap());
                }
            }
            assert_eq!(rotate(&c, 4).unwrap(), c);
            assert_eq!(c.invariants(), rotate(&c, 3).unwrap().invariants());
        }
    }

    #[test]
    fn burnside_examples() {
        assert_eq!(burnside_count(2).unwrap(), BigUint::from(3u32));
        assert_eq!(burnside_count(3).unwrap(), BigUint::from(11u32));
        assert!(burnside_count(1).is_err());
        assert!(burnside_count(9).is_err());
    }

    #[test]
    fn half_turn_fixed_points() {
        let fixed: BTreeSet<String> = enumerate(3)
            .unwrap()
            .filter(|c| rotate(c, 1).unwrap() == *c)
            .map(|c| render(&c))
            .collect();
        let expected: BTreeSet<String> = ["0123", "(01)(23)", "(0(12)3)", "[01][23]", "[0[12]3]"]
            .map(String::from)
            .into();
        assert_eq!(fixed, expected);
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_totient(1).unwrap(), 1);
        assert_eq!(euler_totient(2).unwrap(), 1);
        assert_eq!(euler_totient(12).unwrap(), 4);
        assert_eq!(euler_totient(97).unwrap(), 96);
        assert!(euler_totient(0).is_err());
    }

    #[test]
    fn polya_examples() {
        let int = |n: i64| BigRational::from_integer(BigInt::from(n));
        let conv = PolyaConvention::ZPowDMinus1;
        assert_eq!(polya_coefficient(2, conv).unwrap(), int(1));
        assert_eq!(polya_coefficient(3, conv).unwrap(), int(4));
        assert_eq!(polya_coefficient(4, conv).unwrap(), int(21));
    }

    #[test]
    fn report_flags_discrepancy() {
        let r = ModuliReport::build(3).unwrap();
        assert_eq!(r.burnside, Some(BigUint::from(11u32)));
        assert!(r.discrepancy());
    }
}
