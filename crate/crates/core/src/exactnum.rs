//! Exact arithmetic: big integers, reduced rationals, the factorial family with
//! the conventions the matrix builders rely on, and univariate polynomials with
//! rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
/// Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `p` or `p/q` back into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::domain(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Returns the integer value of `r`, or a domain error if it is not integral.
pub fn to_integer(r: &Rational) -> Result<Integer> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::domain(format!("expected an integer, got {r}")))
    }
}

pub fn factorial(m: i64) -> Result<Integer> {
    if m < 0 {
        return Err(Error::domain(format!("factorial of negative argument {m}")));
    }
    Ok((2..=m).fold(BigInt::one(), |acc, k| acc * k))
}

/// `1/m!`, with `1/m! = 0` for negative `m`.
pub fn reciprocal_factorial(m: i64) -> Rational {
    match factorial(m) {
        Ok(f) => BigRational::new(BigInt::one(), f),
        Err(_) => Rational::zero(),
    }
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn shifted_factorial(a: i64, k: i64) -> Result<Integer> {
    if k < 0 {
        return Err(Error::domain(format!("shifted factorial with negative length {k}")));
    }
    Ok((0..k).fold(BigInt::one(), |acc, i| acc * (a + i)))
}

/// Falling-factorial binomial coefficient: `m (m-1) ... (m-k+1) / k!` for
/// `k >= 0` (any sign of `m`), and 0 for `k < 0`.
pub fn binomial(m: i64, k: i64) -> Integer {
    if k < 0 {
        return BigInt::zero();
    }
    if m >= 0 && k > m {
        return BigInt::zero();
    }
    // Use the symmetric side when it is shorter.
    let k = if m >= 0 && 2 * k > m { m - k } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        // Each partial product is itself a binomial coefficient, so the
        // division is exact.
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// Univariate polynomial with rational coefficients; `coeffs[d]` multiplies `t^d`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn identity() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self(inner(t))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * inner) + &Polynomial::constant(c.clone())
        })
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        Polynomial::new(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Polynomial {
    /// Renders the polynomial in the variable `var`.
    pub fn render(&self, var: &str) -> String {
        let mut s = String::new();
        self.write_in(&mut s, var).expect("writing to a String cannot fail");
        s
    }

    fn write_in(&self, f: &mut impl fmt::Write, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = d == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match d {
                0 => {}
                1 => write!(f, "{var}")?,
                _ => write!(f, "{var}^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in(f, "t")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// The unique polynomial of degree `< points.len()` through `points`, via
/// Newton divided differences.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::domain(format!("duplicate abscissa {xi}")));
        }
    }
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..points.len() {
        for i in (level..points.len()).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner over the Newton basis: c0 + (t-x0)(c1 + (t-x1)(c2 + ...)).
    let mut poly = Polynomial::zero();
    for i in (0..points.len()).rev() {
        let shift = Polynomial::new(vec![-xs[i].clone(), Rational::one()]);
        poly = &(&poly * &shift) + &Polynomial::constant(table[i].clone());
    }
    Ok(poly)
}

/// Interpolates an integer-sampled function at `t = 0, 1, ..., degree_bound`.
pub fn interpolate_fn<F>(degree_bound: usize, mut f: F) -> Result<Polynomial>
where
    F: FnMut(i64) -> Result<Rational>,
{
    let points = (0..=degree_bound as i64)
        .map(|t| Ok((rat(t), f(t)?)))
        .collect::<Result<Vec<_>>>()?;
    interpolate(&points)
}
