//! Exact counts of configurations.
//!
//! The engine is the string recursion
//! `p_n = p_{n-1} + 2 * sum_{2a+b+2=n} p_{2a} p_b` with `c_d = p_{2d-2}`,
//! refined by dimension (`t` marks a round pair once and a square pair
//! twice) and by type (`s` square pairs, `h` round pairs). Closed forms go
//! through the terminating sum `2F1([2-2d, 1-d]; [2]; t + t^2)`, and the
//! cubic `G^3 - G^2 + (z+1)G/4 - z/4 = 0` is solved order by order as an
//! independent check.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

fn degree_arg(d: i64) -> Result<usize> {
    if d < 1 {
        return Err(domain(format!("degree must be at least 1, got {d}")));
    }
    usize::try_from(d).map_err(|_| domain("degree out of range"))
}

/// Extends a memo table in place up to index `n` inclusive.
fn memo_upto<T: Clone>(
    cell: &'static OnceLock<Mutex<Vec<T>>>,
    n: usize,
    step: impl Fn(&[T], usize) -> T,
) -> Vec<T> {
    let mut table = cell
        .get_or_init(|| Mutex::new(Vec::new()))
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let next = step(&table, table.len());
        table.push(next);
    }
    table[..=n].to_vec()
}

fn p_step(p: &[BigUint], n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let mut pairs = BigUint::zero();
    let mut a = 0;
    while 2 * a + 2 <= n {
        pairs += &p[2 * a] * &p[n - 2 - 2 * a];
        a += 1;
    }
    &p[n - 1] + pairs * 2u32
}

static P_TABLE: OnceLock<Mutex<Vec<BigUint>>> = OnceLock::new();

/// `p_0 ..= p_n` from the string recursion.
pub fn p_table(n: usize) -> Vec<BigUint> {
    memo_upto(&P_TABLE, n, p_step)
}

/// Number of valid strings on `n` elements; zero for negative `n`.
pub fn p_rec(n: i64) -> BigUint {
    match usize::try_from(n) {
        Ok(n) => p_table(n).pop().expect("nonempty table"),
        Err(_) => BigUint::zero(),
    }
}

/// `c_d`, the number of configurations of degree `d`.
pub fn c_total(d: i64) -> Result<BigUint> {
    let d = degree_arg(d)?;
    Ok(p_rec(2 * d as i64 - 2))
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// If `x` is an integer `<= 0`, its negation.
fn nonpositive_integer(x: &BigRational) -> Option<usize> {
    if x.is_integer() && !x.is_positive() {
        (-x.to_integer()).to_usize()
    } else {
        None
    }
}

/// Exact value of a terminating `2F1([a, b]; [c]; z)`.
pub fn hyper2f1_terminating(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    z: &BigRational,
) -> Result<BigRational> {
    let last = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(m), Some(n)) => m.min(n),
        (Some(m), None) | (None, Some(m)) => m,
        (None, None) => {
            return Err(Error::Hypergeometric(format!(
                "series with a = {a}, b = {b} does not terminate"
            )))
        }
    };
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for n in 0..last {
        let k = rational(n as i64);
        let denom = (c + &k) * (&k + BigRational::one());
        if denom.is_zero() {
            return Err(Error::Hypergeometric(format!(
                "(c)_n vanishes at n = {} before the series terminates",
                n + 1
            )));
        }
        term = term * (a + &k) * (b + &k) * z / denom;
        sum += &term;
    }
    Ok(sum)
}

fn expect_count(value: BigRational, what: &str) -> BigUint {
    assert!(
        value.is_integer() && !value.is_negative(),
        "{what} evaluated to non-integral {value}"
    );
    value
        .to_integer()
        .to_biguint()
        .expect("nonnegative integer")
}

/// `c_d = 2F1([2-2d, 1-d]; [2]; 2)`.
///
/// # Panics
///
/// If the sum is not a nonnegative integer, which would mean the
/// implementation is wrong.
pub fn c_total_closed(d: i64) -> Result<BigUint> {
    degree_arg(d)?;
    let value = hyper2f1_terminating(
        &rational(2 - 2 * d),
        &rational(1 - d),
        &rational(2),
        &rational(2),
    )?;
    Ok(expect_count(value, &format!("closed form for c_{d}")))
}

/// Coefficients `[z^k] G` for `k = 0 ..= len - 1` of a power series given
/// by its coefficient vector, squared.
fn square_series(g: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, gi) in g.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, gj) in g.iter().enumerate().take(len.saturating_sub(i)) {
            out[i + j] += gi * gj;
        }
    }
    out
}

/// `c_1 ..= c_max` extracted from the cubic for `G(z)` by undetermined
/// coefficients on the branch with `G(0) = 0`.
pub fn coeffs_algebraic(max: usize) -> Vec<BigUint> {
    // 4[z^n] of the cubic: 4[G^3]_n - 4[G^2]_n + c_n + c_{n-1} - [n = 1] = 0,
    // and [G^2]_n, [G^3]_n only involve c_1 .. c_{n-1} since c_0 = 0.
    let mut g = vec![BigInt::zero()];
    for n in 1..=max {
        let len = n + 1;
        let sq = square_series(&g, len);
        let mut cube_n = BigInt::zero();
        for (i, s) in sq.iter().enumerate() {
            if i <= n && n - i < g.len() {
                cube_n += s * &g[n - i];
            }
        }
        let mut c = (&sq[n] - cube_n) * 4 - &g[n - 1];
        if n == 1 {
            c += 1;
        }
        g.push(c);
    }
    g.into_iter()
        .skip(1)
        .map(|c| c.to_biguint().expect("coefficients are nonnegative"))
        .collect()
}

/// The terms `A_n = (2-2d)_n (1-d)_n / ((2)_n n!)` of the closed form, so
/// that `c_d(t) = sum_n A_n (t + t^2)^n`.
pub fn hypergeometric_terms(d: i64) -> Result<Vec<BigRational>> {
    let du = degree_arg(d)?;
    let (a, b, c) = (rational(2 - 2 * d), rational(1 - d), rational(2));
    let mut terms = vec![BigRational::one()];
    for n in 0..du - 1 {
        let k = rational(n as i64);
        let prev = terms.last().expect("nonempty");
        let next = prev * (&a + &k) * (&b + &k) / ((&c + &k) * (&k + BigRational::one()));
        terms.push(next);
    }
    Ok(terms)
}

/// `c_{d,q}` for `q = 0 ..= 2(d-1)` from the closed form
/// `sum_n A_n C(n, q-n)`.
pub fn dimension_distribution_closed(d: i64) -> Result<Vec<BigUint>> {
    let terms = hypergeometric_terms(d)?;
    let top = 2 * (degree_arg(d)? - 1);
    Ok((0..=top)
        .map(|q| {
            let mut sum = BigRational::zero();
            for (n, a) in terms.iter().enumerate() {
                if n <= q && q - n <= n {
                    sum += a * BigRational::from_integer(binomial(
                        BigInt::from(n),
                        BigInt::from(q - n),
                    ));
                }
            }
            expect_count(sum, &format!("closed form for c_{{{d},{q}}}"))
        })
        .collect())
}

type Poly = Vec<BigUint>;

fn poly_mul_add(out: &mut Poly, x: &[BigUint], y: &[BigUint], shift: usize) {
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            out[i + j + shift] += xi * yj;
        }
    }
}

fn bivariate_step(p: &[Poly], n: usize) -> Poly {
    if n == 0 {
        return vec![BigUint::one()];
    }
    let mut out = vec![BigUint::zero(); n + 1];
    for (q, v) in p[n - 1].iter().enumerate() {
        out[q] += v;
    }
    let mut a = 0;
    while 2 * a + 2 <= n {
        let (inner, rest) = (&p[2 * a], &p[n - 2 - 2 * a]);
        poly_mul_add(&mut out, inner, rest, 1); // round
        poly_mul_add(&mut out, inner, rest, 2); // square
        a += 1;
    }
    out
}

static BIVARIATE: OnceLock<Mutex<Vec<Poly>>> = OnceLock::new();

/// `c_{d,q}` from the dimension-refined string recursion.
pub fn dimension_distribution_recursive(d: i64) -> Result<Vec<BigUint>> {
    let n = 2 * (degree_arg(d)? - 1);
    let mut v = memo_upto(&BIVARIATE, n, bivariate_step)
        .pop()
        .expect("nonempty table");
    v.resize(n + 1, BigUint::zero());
    Ok(v)
}

/// Degrees up to which [`dimension_distribution`] runs the recursion
/// alongside the closed form.
pub const RECURSIVE_CHECK_BOUND: usize = 60;

/// `c_{d,q}` for `q = 0 ..= 2(d-1)`.
///
/// For `d <= RECURSIVE_CHECK_BOUND` the closed form and the recursion are
/// both evaluated and must agree.
///
/// # Panics
///
/// If the two routes disagree.
pub fn dimension_distribution(d: i64) -> Result<Vec<BigUint>> {
    let closed = dimension_distribution_closed(d)?;
    if degree_arg(d)? <= RECURSIVE_CHECK_BOUND {
        let recursive = dimension_distribution_recursive(d)?;
        assert_eq!(
            closed, recursive,
            "c_{{{d},q}} closed form and recursion disagree"
        );
    }
    Ok(closed)
}

/// Counts indexed `[s][h]`.
type Grid = Vec<Vec<BigUint>>;

fn trivariate_step(p: &[Grid], n: usize) -> Grid {
    let half = n / 2;
    let mut out = vec![vec![BigUint::zero(); half + 1]; half + 1];
    if n == 0 {
        out[0][0] = BigUint::one();
        return out;
    }
    for (s, row) in p[n - 1].iter().enumerate() {
        for (h, v) in row.iter().enumerate() {
            out[s][h] += v;
        }
    }
    let mut a = 0;
    while 2 * a + 2 <= n {
        let (inner, rest) = (&p[2 * a], &p[n - 2 - 2 * a]);
        for (s1, r1) in inner.iter().enumerate() {
            for (h1, x) in r1.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (s2, r2) in rest.iter().enumerate() {
                    for (h2, y) in r2.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        let prod = x * y;
                        out[s1 + s2][h1 + h2 + 1] += &prod;
                        out[s1 + s2 + 1][h1 + h2] += prod;
                    }
                }
            }
        }
        a += 1;
    }
    out
}

static TRIVARIATE: OnceLock<Mutex<Vec<Grid>>> = OnceLock::new();

/// `c_{d,s,h}` from the type-refined string recursion, zero entries
/// omitted.
///
/// # Panics
///
/// If the marginals under `q = 2s + h` differ from
/// [`dimension_distribution`] or the total differs from [`c_total`].
pub fn type_distribution(d: i64) -> Result<BTreeMap<(usize, usize), BigUint>> {
    let n = 2 * (degree_arg(d)? - 1);
    let grid = memo_upto(&TRIVARIATE, n, trivariate_step)
        .pop()
        .expect("nonempty table");
    let mut map = BTreeMap::new();
    let mut marginal = vec![BigUint::zero(); n + 1];
    for (s, row) in grid.into_iter().enumerate() {
        for (h, v) in row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            marginal[2 * s + h] += &v;
            map.insert((s, h), v);
        }
    }
    assert_eq!(
        marginal,
        dimension_distribution(d)?,
        "c_{{{d},s,h}} marginals disagree with c_{{{d},q}}"
    );
    let total: BigUint = map.values().sum();
    assert_eq!(total, c_total(d)?, "c_{{{d},s,h}} does not sum to c_{d}");
    Ok(map)
}

/// Catalan number `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: i64) -> Result<BigUint> {
    let n = u64::try_from(n).map_err(|_| domain("catalan index must be nonnegative"))?;
    Ok(binomial(BigUint::from(2 * n), BigUint::from(n)) / BigUint::from(n + 1))
}

/// Number of structurally stable configurations of degree `d`: all pairs
/// square and every index paired.
pub fn structurally_stable_count(d: i64) -> Result<BigUint> {
    catalan(degree_arg(d)? as i64 - 1)
}

/// `q_n = p_{2n}` and `r_n = p_{2n-1}` for `n = 0 ..= max` from the
/// even/odd split recursions, computed without the `p_n` table.
pub fn split_sequences(max: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut q: Vec<BigUint> = Vec::with_capacity(max + 1);
    let mut r: Vec<BigUint> = Vec::with_capacity(max + 1);
    q.push(BigUint::one());
    r.push(BigUint::zero());
    for n in 1..=max {
        let mut rn = q[n - 1].clone();
        let mut acc = BigUint::zero();
        for j in 0..n {
            acc += &q[j] * &r[n - j - 1];
        }
        rn += acc * 2u32;
        r.push(rn);
        let mut acc = BigUint::zero();
        for j in 0..n {
            acc += &q[j] * &q[n - j - 1];
        }
        q.push(&r[n] + acc * 2u32);
    }
    (q, r)
}

/// Exact counts for one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub degree: usize,
    pub total: BigUint,
    /// `c_{d,q}` for `q = 0 ..= 2(d-1)`.
    pub by_dimension: Vec<BigUint>,
    /// `c_{d,s,h}`, present only when requested.
    pub by_type: Option<BTreeMap<(usize, usize), BigUint>>,
}

impl CountTable {
    pub fn build(d: i64, with_types: bool) -> Result<CountTable> {
        let degree = degree_arg(d)?;
        let by_type = if with_types {
            Some(type_distribution(d)?)
        } else {
            None
        };
        Ok(CountTable {
            degree,
            total: c_total(d)?,
            by_dimension: dimension_distribution(d)?,
            by_type,
        })
    }

    /// Violated table identities, empty when all hold.
    pub fn check(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let top = 2 * (self.degree - 1);
        if self.by_dimension.len() != top + 1 {
            failures.push(format!(
                "by_dimension has length {}",
                self.by_dimension.len()
            ));
            return failures;
        }
        let sum: BigUint = self.by_dimension.iter().sum();
        if sum != self.total {
            failures.push(format!("sum over q is {sum}, total is {}", self.total));
        }
        if !self.by_dimension[0].is_one() {
            failures.push(format!("c_{{d,0}} = {}", self.by_dimension[0]));
        }
        let cat = catalan(self.degree as i64 - 1).expect("nonnegative index");
        if self.by_dimension[top] != cat {
            failures.push(format!(
                "c_{{d,{top}}} = {}, Catalan is {cat}",
                self.by_dimension[top]
            ));
        }
        if let Some(types) = &self.by_type {
            let mut marginal = vec![BigUint::zero(); top + 1];
            for (&(s, h), v) in types {
                match marginal.get_mut(2 * s + h) {
                    Some(slot) => *slot += v,
                    None => failures.push(format!("type ({s},{h}) exceeds the top dimension")),
                }
            }
            if marginal != self.by_dimension {
                failures.push("type marginals differ from by_dimension".to_string());
            }
        }
        failures
    }
}

/// Pairs `(d, q)` with `2 <= d <= max` and `c_{d,q} = 0`. Empty in every
/// computed case; reported rather than assumed.
pub fn zero_dimension_entries(max: usize) -> Vec<(usize, usize)> {
    (2..=max)
        .flat_map(|d| {
            let v = dimension_distribution_closed(d as i64).expect("degree in range");
            v.into_iter()
                .enumerate()
                .filter(|(_, c)| c.is_zero())
                .map(move |(q, _)| (d, q))
                .collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn r(n: i64) -> BigRational {
        rational(n)
    }

    #[test]
    fn p_rec_examples() {
        assert_eq!(p_rec(0), BigUint::from(1u32));
        assert_eq!(p_rec(3), BigUint::from(5u32));
        assert_eq!(p_rec(6), BigUint::from(119u32));
        assert_eq!(p_rec(14), BigUint::from(611_567u32));
        assert_eq!(p_rec(-3), BigUint::zero());
    }

    #[test]
    fn c_total_examples() {
        let expected = [1u64, 3, 17, 119, 929, 7755, 67745, 611_567];
        for (d, &c) in (1..).zip(expected.iter()) {
            assert_eq!(c_total(d).unwrap(), BigUint::from(c));
            assert_eq!(c_total_closed(d).unwrap(), BigUint::from(c));
        }
        assert!(c_total(0).is_err());
        assert!(c_total_closed(0).is_err());
    }

    #[test]
    fn hypergeometric_examples() {
        assert_eq!(
            hyper2f1_terminating(&r(-2), &r(-1), &r(2), &r(2)).unwrap(),
            r(3)
        );
        assert_eq!(
            hyper2f1_terminating(&r(-4), &r(-2), &r(2), &r(2)).unwrap(),
            r(17)
        );
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            hyper2f1_terminating(&r(0), &half, &r(7), &half).unwrap(),
            r(1)
        );
    }

    #[test]
    fn hypergeometric_rejections() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert!(matches!(
            hyper2f1_terminating(&half, &r(1), &r(2), &r(1)),
            Err(Error::Hypergeometric(_))
        ));
        // (c)_n hits zero at n = 2, before the a = -3 series ends
        assert!(matches!(
            hyper2f1_terminating(&r(-3), &r(1), &r(-1), &r(1)),
            Err(Error::Hypergeometric(_))
        ));
    }

    #[test]
    fn algebraic_coefficients() {
        assert_eq!(coeffs_algebraic(4), big(&[1, 3, 17, 119]));
        assert_eq!(*coeffs_algebraic(6).last().unwrap(), BigUint::from(7755u32));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension_distribution(1).unwrap(), big(&[1]));
        assert_eq!(dimension_distribution(2).unwrap(), big(&[1, 1, 1]));
        assert_eq!(dimension_distribution(3).unwrap(), big(&[1, 4, 6, 4, 2]));
        assert_eq!(
            dimension_distribution(4).unwrap(),
            big(&[1, 9, 24, 35, 30, 15, 5])
        );
    }

    #[test]
    fn type_examples() {
        let d2 = type_distribution(2).unwrap();
        let expected: BTreeMap<_, _> = [((0, 0), 1u32), ((0, 1), 1), ((1, 0), 1)]
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect();
        assert_eq!(d2, expected);
        assert_eq!(type_distribution(3).unwrap()[&(2, 0)], BigUint::from(2u32));
        let total: BigUint = type_distribution(4).unwrap().values().sum();
        assert_eq!(total, BigUint::from(119u32));
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0).unwrap(), BigUint::one());
        assert_eq!(catalan(3).unwrap(), BigUint::from(5u32));
        assert!(catalan(-1).is_err());
        assert_eq!(structurally_stable_count(3).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn split_recursions_match_p() {
        let (q, r) = split_sequences(100);
        let p = p_table(200);
        for n in 0..=100 {
            assert_eq!(q[n], p[2 * n]);
            if n >= 1 {
                assert_eq!(r[n], p[2 * n - 1]);
            }
        }
    }

    #[test]
    fn count_table_identities() {
        for d in 1..=8 {
            let t = CountTable::build(d, true).unwrap();
            assert!(t.check().is_empty(), "d={d}: {:?}", t.check());
        }
    }

    #[test]
    fn no_zero_entries_small() {
        assert!(zero_dimension_entries(20).is_empty());
    }
}
