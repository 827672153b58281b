//! Growth rate, dimension statistics and their limits.
//!
//! The radius of convergence of `G(z)` is `R = (5 sqrt 5 - 11) / 2`, so
//! `c_d` grows like `(1/R)^d`. Writing `rho(t)` for the dominant
//! singularity of `G(z, t)`, the mean and variance of the dimension
//! satisfy `mu_d ~ kappa d` and `sigma_d^2 ~ lambda d` with
//! `kappa = -rho'(1)/rho(1)` and
//! `lambda = -rho''(1)/rho(1) - rho'(1)/rho(1) + (rho'(1)/rho(1))^2`.
//! `R` is stored as the positive value; the closed expression has a
//! negative numerator over a negative denominator.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::counting::{c_total, dimension_distribution_closed};
use crate::error::{domain, Result};
use crate::surd::Surd5;

/// Exact constants in `Q(sqrt 5)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactConstants {
    /// Radius of convergence, equal to `rho(1)`.
    pub r: Surd5,
    /// `1/R`.
    pub growth: Surd5,
    pub rho: Surd5,
    pub rho_prime: Surd5,
    pub rho_double_prime: Surd5,
    pub kappa: Surd5,
    pub lambda: Surd5,
}

impl ExactConstants {
    /// `(name, value)` pairs in a fixed order.
    pub fn named(&self) -> Vec<(&'static str, &Surd5)> {
        vec![
            ("R", &self.r),
            ("growth", &self.growth),
            ("rho(1)", &self.rho),
            ("rho'(1)", &self.rho_prime),
            ("rho''(1)", &self.rho_double_prime),
            ("kappa", &self.kappa),
            ("lambda", &self.lambda),
        ]
    }

    /// `rho'(1)/rho(1) + kappa`, zero under the sign convention used here.
    pub fn kappa_defect(&self) -> Surd5 {
        self.rho_prime.clone() / self.rho.clone() + self.kappa.clone()
    }

    /// `lambda` recomputed from `rho(1)`, `rho'(1)`, `rho''(1)`.
    pub fn lambda_from_rho(&self) -> Surd5 {
        let ratio1 = self.rho_prime.clone() / self.rho.clone();
        let ratio2 = self.rho_double_prime.clone() / self.rho.clone();
        -ratio2 - ratio1.clone() + ratio1.clone() * ratio1
    }
}

pub fn exact_constants() -> ExactConstants {
    let r = Surd5::from_ints(-11, 5, 2);
    let rho_prime = Surd5::from_ints(87, -39, 2);
    let rho_double_prime = (Surd5::from_ints(702, 0, 1) * r.clone()
        + Surd5::from_ints(716, 0, 1) * rho_prime.clone())
        / Surd5::from_ints(-60, 0, 1);
    ExactConstants {
        growth: Surd5::from_ints(1, 0, 1) / r.clone(),
        rho: r.clone(),
        r,
        rho_prime,
        rho_double_prime,
        kappa: Surd5::from_ints(9, -3, 2),
        lambda: Surd5::from_ints(-60, 29, 10),
    }
}

/// Exact distribution of the dimension over configurations of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionStats {
    pub degree: usize,
    pub mean: BigRational,
    pub variance: BigRational,
    /// `pi_{d,q} = c_{d,q} / c_d`.
    pub mass: Vec<BigRational>,
}

fn ratio_of(n: &BigUint, d: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
}

pub fn stats(d: i64) -> Result<DistributionStats> {
    let counts = dimension_distribution_closed(d)?;
    let total: BigUint = counts.iter().sum();
    let mut mean = BigRational::zero();
    let mut second = BigRational::zero();
    let mut mass = Vec::with_capacity(counts.len());
    for (q, c) in counts.iter().enumerate() {
        let p = ratio_of(c, &total);
        let qr = BigRational::from_integer(BigInt::from(q));
        mean += &p * &qr;
        second += &p * &qr * &qr;
        mass.push(p);
    }
    let variance = second - &mean * &mean;
    Ok(DistributionStats {
        degree: counts.len().div_ceil(2),
        mean,
        variance,
        mass,
    })
}

/// `c_d / c_{d-1}`.
pub fn ratio(d: i64) -> Result<BigRational> {
    if d < 2 {
        return Err(domain(format!("ratio needs degree at least 2, got {d}")));
    }
    Ok(ratio_of(&c_total(d)?, &c_total(d - 1)?))
}

/// Standard normal distribution function.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Supremum distance between the distribution function of the
/// standardized dimension and the standard normal one, taken on both sides
/// of every jump.
pub fn normality_distance(d: i64) -> Result<f64> {
    let st = stats(d)?;
    if st.variance.is_zero() {
        return Err(domain("zero variance: the distribution is a point mass"));
    }
    let mean = st.mean.to_f64().expect("finite mean");
    let sd = st.variance.to_f64().expect("finite variance").sqrt();
    let mut cumulative = BigRational::zero();
    let mut sup: f64 = 0.0;
    for (q, p) in st.mass.iter().enumerate() {
        let x = (q as f64 - mean) / sd;
        let phi = normal_cdf(x);
        let below = cumulative.to_f64().expect("finite");
        cumulative += p;
        let at = cumulative.to_f64().expect("finite");
        sup = sup.max((below - phi).abs()).max((at - phi).abs());
    }
    Ok(sup.min(1.0))
}

/// One sampled convergence statistic.
#[derive(Debug, Clone, PartialEq)]
pub struct Trend {
    pub name: &'static str,
    /// `(d, value)` in the order sampled.
    pub points: Vec<(usize, f64)>,
    pub tolerance: f64,
}

impl Trend {
    pub fn strictly_decreasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].1 < w[0].1)
    }

    pub fn last_within(&self) -> bool {
        self.points.last().is_some_and(|&(_, v)| v < self.tolerance)
    }

    pub fn holds(&self) -> bool {
        self.strictly_decreasing() && self.last_within()
    }
}

/// Convergence statistics over a set of degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    /// `|c_d / c_{d-1} - 1/R|`.
    pub ratio: Trend,
    /// `|mu_d / d - kappa|`.
    pub mean: Trend,
    /// `|sigma_d^2 / d - lambda|`.
    pub variance: Trend,
    /// [`normality_distance`].
    pub normality: Trend,
}

impl AsymptoticReport {
    pub fn trends(&self) -> [&Trend; 4] {
        [&self.ratio, &self.mean, &self.variance, &self.normality]
    }
}

pub const DEFAULT_TOLERANCE: f64 = 0.05;

pub fn asymptotic_report(degrees: &[usize]) -> Result<AsymptoticReport> {
    let consts = exact_constants();
    let growth = consts.growth.to_f64();
    let kappa = consts.kappa.to_f64();
    let lambda = consts.lambda.to_f64();
    let trend = |name| Trend {
        name,
        points: Vec::new(),
        tolerance: DEFAULT_TOLERANCE,
    };
    let mut report = AsymptoticReport {
        ratio: trend("ratio"),
        mean: trend("mean"),
        variance: trend("variance"),
        normality: trend("normality"),
    };
    for &d in degrees {
        let di = i64::try_from(d).map_err(|_| domain("degree out of range"))?;
        let st = stats(di)?;
        let r = ratio(di)?.to_f64().expect("finite ratio");
        let df = d as f64;
        report.ratio.points.push((d, (r - growth).abs()));
        report
            .mean
            .points
            .push((d, (st.mean.to_f64().expect("finite") / df - kappa).abs()));
        report.variance.points.push((
            d,
            (st.variance.to_f64().expect("finite") / df - lambda).abs(),
        ));
        report.normality.points.push((d, normality_distance(di)?));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn constant_values() {
        let c = exact_constants();
        assert!((c.growth.to_f64() - 11.090_169_9).abs() < 1e-7);
        assert!((c.r.to_f64() - 0.090_169_9).abs() < 1e-7);
        assert!((c.kappa.to_f64() - 1.145_898_03).abs() < 1e-8);
        assert!((c.lambda.to_f64() - 0.484_597_13).abs() < 1e-8);
        assert_eq!(c.growth, Surd5::from_ints(11, 5, 2));
    }

    #[test]
    fn constant_identities() {
        let c = exact_constants();
        assert!(c.kappa_defect().is_zero());
        assert_eq!(c.lambda_from_rho(), c.lambda);
    }

    #[test]
    fn stats_examples() {
        let s1 = stats(1).unwrap();
        assert_eq!((s1.mean.clone(), s1.variance.clone()), (q(0, 1), q(0, 1)));
        let s2 = stats(2).unwrap();
        assert_eq!((s2.mean, s2.variance), (q(1, 1), q(2, 3)));
        let s3 = stats(3).unwrap();
        assert_eq!((s3.mean, s3.variance), (q(36, 17), q(336, 289)));
        assert_eq!(s3.degree, 3);
        assert!(stats(0).is_err());
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio(3).unwrap(), q(17, 3));
        assert_eq!(ratio(4).unwrap(), q(7, 1));
        assert!(ratio(1).is_err());
    }

    #[test]
    fn normality_bounds() {
        assert!(normality_distance(1).is_err());
        for d in [2, 5, 12] {
            let v = normality_distance(d).unwrap();
            assert!((0.0..=1.0).contains(&v));
        }
        assert!(normality_distance(25).unwrap() > normality_distance(60).unwrap());
    }

    #[test]
    fn normal_cdf_reference_values() {
        assert!((normal_cdf(0.0) - 0.5).abs() < 1e-15);
        assert!((normal_cdf(1.0) - 0.841_344_746_068_542_9).abs() < 1e-13);
        assert!((normal_cdf(-2.0) - 0.022_750_131_948_179_2).abs() < 1e-13);
    }
}
