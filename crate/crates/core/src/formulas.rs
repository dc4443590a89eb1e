//! Product formulas for the symmetry classes of lozenge tilings of hexagons,
//! evaluated exactly.
//!
//! Every function returning [`Integer`] computes a rational product and then
//! checks that it is integral; a non-integral result surfaces as an error
//! rather than being rounded.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{factorial, interpolate, rat, shifted_factorial, to_integer, Integer, Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassTag {
    Base,
    Cs,
    Cstc,
    Cssc,
    Tssc,
    Tc,
    Sc,
}

impl ClassTag {
    pub const ALL: [ClassTag; 7] =
        [ClassTag::Base, ClassTag::Cs, ClassTag::Cstc, ClassTag::Cssc, ClassTag::Tssc, ClassTag::Tc, ClassTag::Sc];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Base => "base",
            ClassTag::Cs => "cs",
            ClassTag::Cstc => "cstc",
            ClassTag::Cssc => "cssc",
            ClassTag::Tssc => "tssc",
            ClassTag::Tc => "tc",
            ClassTag::Sc => "sc",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassTag::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown class '{s}'")))
    }
}

fn fact(m: i64) -> Result<Rational> {
    Ok(Rational::from_integer(factorial(m)?))
}

fn rising(a: i64, k: i64) -> Result<Rational> {
    Ok(Rational::from_integer(shifted_factorial(a, k)?))
}

fn integral(r: Rational, what: &str) -> Result<Integer> {
    to_integer(&r).map_err(|_| Error::domain(format!("{what} evaluated to the non-integer {r}")))
}

/// Determinant of `K_n(x, y)` by its product formula.
pub fn det_k_closed(n: i64, x: i64, y: i64) -> Result<Rational> {
    if n < 0 || x < 0 || y < 0 || x + y == 0 {
        return Err(Error::domain(format!("detK needs n >= 0, x, y >= 0, x + y > 0; got ({n},{x},{y})")));
    }
    let mut acc = Rational::one();
    for i in 0..n {
        acc *= fact(i)? * fact(x + y + i - 1)? * rising(2 * x + y + 2 * i, i)? * rising(x + 2 * y + 2 * i, i)?;
        acc /= fact(x + 2 * i)? * fact(y + 2 * i)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PentagonFormula {
    A,
    B,
}

/// Tiling generating function of the weighted pentagons for `x >= 1`.
pub fn l_closed(kind: PentagonFormula, n: i64, x: i64) -> Result<Rational> {
    if n < 1 {
        return Err(Error::domain(format!("pentagon formula needs n >= 1, got {n}")));
    }
    if x < 1 {
        return Err(Error::domain("pentagon formula needs x >= 1; use the path-determinant route at x = 0"));
    }
    let mut acc = det_k_closed(n, x, 0)?;
    for i in 0..n {
        let f = match kind {
            PentagonFormula::A => x + 3 * i,
            PentagonFormula::B => 2 * x + 3 * i,
        };
        acc *= Rational::new(f.into(), 2.into());
    }
    Ok(acc)
}

/// `CS(2n, 2x+1)` for `n, x >= 1`.
fn cs_even_odd(n: i64, x: i64) -> Result<Rational> {
    let mut acc = fact(n)? * fact(x - 1)? / fact(2 * n)?;
    for i in 0..=n {
        acc *= rising(x + 2 * i, i + 1)? / fact(x + n + i)?;
    }
    for i in 0..n {
        let top = fact(i)?.pow(2) * rising(2 * x + 2 * i + 2, i + 1)?.pow(2) * fact(x + i)? * rising(x + 2 * i + 1, i)?;
        acc *= top / fact(2 * i)?.pow(2);
    }
    Ok(acc)
}

/// `CS(2n-1, 2x+1)` for `n, x >= 1`.
fn cs_odd_odd(n: i64, x: i64) -> Result<Rational> {
    let mut acc = fact(x - 1)? * rising(2 * x + 2 * n, n)? / fact(x + n - 1)?;
    for i in 0..n {
        let top = fact(i)?.pow(2)
            * rising(2 * x + 2 * i, i)?.pow(2)
            * fact(x + i)?
            * rising(x + 2 * i, i + 1)?
            * rising(x + 2 * i + 1, i)?;
        acc *= top / (fact(2 * i)?.pow(2) * fact(x + n + i)?);
    }
    Ok(acc)
}

/// Cyclically symmetric count of the cored hexagon `H_{n,x}` at odd `x >= 3`.
fn cs_direct(n: i64, x: i64) -> Result<Rational> {
    let xp = (x - 1) / 2;
    if n % 2 == 0 {
        cs_even_odd(n / 2, xp)
    } else {
        cs_odd_odd((n + 1) / 2, xp)
    }
}

/// Degree bound of `CS(n, x)` as a polynomial in `x`.
pub fn cs_degree_bound(n: i64) -> usize {
    (n * (n - 1) / 2).max(0) as usize
}

/// The polynomial `P_n(t)` with `CS(n, x) = P_n((x-1)/2)`, interpolated
/// from the product formula at `t = 1, 2, ...`.
pub fn cs_polynomial(n: i64) -> Result<Polynomial> {
    if n < 1 {
        return Err(Error::domain(format!("CS polynomial needs n >= 1, got {n}")));
    }
    let samples = (1..=cs_degree_bound(n) as i64 + 1)
        .map(|t| Ok((rat(t), cs_direct(n, 2 * t + 1)?)))
        .collect::<Result<Vec<_>>>()?;
    interpolate(&samples)
}

/// Number of cyclically symmetric tilings of `H_{n,x}`; `CS(0, x) = 1`.
pub fn cs_closed(n: i64, x: i64) -> Result<Integer> {
    if n < 0 || x < 0 {
        return Err(Error::domain(format!("CS needs n, x >= 0, got ({n},{x})")));
    }
    if n == 0 {
        return Ok(Integer::one());
    }
    let value = if x >= 3 && x % 2 == 1 {
        cs_direct(n, x)?
    } else {
        cs_polynomial(n)?.eval(&Rational::new((x - 1).into(), 2.into()))
    };
    integral(value, "CS")
}

/// Cyclically symmetric, transpose-complementary count of `H_{n,x}`; zero
/// unless `n` and `x` are both even.
pub fn cstc_closed(n: i64, x: i64) -> Result<Integer> {
    if n < 0 || x < 0 {
        return Err(Error::domain(format!("CSTC needs n, x >= 0, got ({n},{x})")));
    }
    if n % 2 == 1 || x % 2 == 1 {
        return Ok(Integer::from(0));
    }
    let m = n / 2;
    let mut acc = Rational::new(Integer::one(), Integer::from(2).pow(m as u32));
    for k in 0..m {
        acc *= Rational::from_integer(cs_closed(2 * k + 1, x)?) / Rational::from_integer(cs_closed(2 * k, x)?);
    }
    integral(acc, "CSTC")
}

fn half_even(two_n: i64, what: &str) -> Result<i64> {
    if two_n < 2 || two_n % 2 != 0 {
        return Err(Error::domain(format!("{what} needs an even size >= 2, got {two_n}")));
    }
    Ok(two_n / 2)
}

/// Totally symmetric self-complementary count of `H(2n, 2n, 2n)`.
pub fn tssc_closed(two_n: i64) -> Result<Integer> {
    let n = half_even(two_n, "TSSC")?;
    let mut acc = Rational::one();
    for i in 0..n {
        acc *= fact(3 * i + 1)? / fact(n + i)?;
    }
    integral(acc, "TSSC")
}

/// Cyclically symmetric self-complementary count of `H(2n, 2n, 2n)`.
pub fn cssc_closed(two_n: i64) -> Result<Integer> {
    half_even(two_n, "CSSC")?;
    Ok(tssc_closed(two_n)?.pow(2))
}

/// Transpose-complementary count of `H(a, a, 2b)`.
pub fn tc_closed(a: i64, b: i64) -> Result<Integer> {
    if a < 1 || b < 0 {
        return Err(Error::domain(format!("TC needs a >= 1, b >= 0, got ({a},{b})")));
    }
    let mut acc = Rational::one();
    for j in 1..a {
        acc *= Rational::new((b + j).into(), j.into()).pow(j.min(a - j) as i32);
    }
    for j in 1..a - 1 {
        acc *= Rational::new((2 * b + 2 * j + 1).into(), (2 * j + 1).into()).pow(j.min(a - 1 - j) as i32);
    }
    integral(acc, "TC")
}

/// MacMahon's count of plane partitions in an `a × b × c` box.
pub fn macmahon_pp(a: i64, b: i64, c: i64) -> Result<Integer> {
    if a < 0 || b < 0 || c < 0 {
        return Err(Error::domain(format!("PP needs a, b, c >= 0, got ({a},{b},{c})")));
    }
    let mut acc = Rational::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                acc *= Rational::new((i + j + k - 1).into(), (i + j + k - 2).into());
            }
        }
    }
    integral(acc, "PP")
}

/// Self-complementary count of `H(a, a, c)`.
pub fn sc_closed(a: i64, c: i64) -> Result<Integer> {
    if a < 0 || c < 0 {
        return Err(Error::domain(format!("SC needs a, c >= 0, got ({a},{c})")));
    }
    let (x, y) = (a / 2, c / 2);
    match (a % 2, c % 2) {
        (0, 0) => Ok(macmahon_pp(x, x, y)?.pow(2)),
        (0, _) => Ok(macmahon_pp(x, x, y)? * macmahon_pp(x, x, y + 1)?),
        (_, 0) => Ok(macmahon_pp(x, x + 1, y)?.pow(2)),
        _ => Ok(Integer::from(0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, int};
    use crate::matrices::{build, determinant, sum_principal_minors, MatrixName};

    #[test]
    fn det_k_examples() {
        assert_eq!(det_k_closed(0, 1, 0).unwrap(), rat(1));
        assert_eq!(det_k_closed(1, 2, 1).unwrap(), rat(1));
        assert_eq!(det_k_closed(2, 1, 1).unwrap(), frac(25, 18));
        assert!(det_k_closed(2, 0, 0).is_err());
    }

    #[test]
    fn det_k_matches_matrix() {
        for n in 0..=6usize {
            for x in 0..=4 {
                for y in 0..=4 {
                    if x + y == 0 {
                        continue;
                    }
                    let m = build(MatrixName::K, n, x, Some(y)).unwrap();
                    assert_eq!(det_k_closed(n as i64, x, y).unwrap(), determinant(&m).unwrap(), "({n},{x},{y})");
                }
            }
        }
    }

    #[test]
    fn pentagon_examples() {
        for x in 1..=3 {
            assert_eq!(l_closed(PentagonFormula::A, 1, x).unwrap(), frac(1, 2));
            assert_eq!(l_closed(PentagonFormula::B, 1, x).unwrap(), rat(1));
        }
        assert_eq!(l_closed(PentagonFormula::A, 2, 1).unwrap(), rat(1));
        assert!(l_closed(PentagonFormula::A, 2, 0).is_err());
    }

    #[test]
    fn direct_cs_values() {
        assert_eq!(cs_odd_odd(1, 1).unwrap(), rat(2));
        assert_eq!(cs_even_odd(1, 1).unwrap(), rat(8));
    }

    #[test]
    fn cs_examples() {
        assert_eq!(cs_closed(1, 3).unwrap(), int(2));
        assert_eq!(cs_closed(2, 3).unwrap(), int(8));
        assert_eq!(cs_closed(3, 0).unwrap(), int(20));
        assert_eq!(cs_closed(0, 7).unwrap(), int(1));
    }

    #[test]
    fn cs_matches_principal_minor_sum() {
        for n in 1..=5 {
            for x in 0..=5 {
                let b = build(MatrixName::B, n as usize, x, None).unwrap();
                let want = sum_principal_minors(&b).unwrap();
                assert_eq!(Rational::from_integer(cs_closed(n, x).unwrap()), want, "({n},{x})");
            }
        }
    }

    #[test]
    fn p2_is_linear() {
        assert_eq!(cs_polynomial(2).unwrap(), Polynomial::from_ints(&[6, 2]));
        assert_eq!(cs_polynomial(1).unwrap(), Polynomial::from_ints(&[2]));
    }

    #[test]
    fn cstc_examples() {
        for x in 0..=2 {
            assert_eq!(cstc_closed(2, 2 * x).unwrap(), int(1));
        }
        assert_eq!(cstc_closed(4, 2).unwrap(), int(3));
        assert_eq!(cstc_closed(3, 2).unwrap(), int(0));
        assert_eq!(cstc_closed(4, 1).unwrap(), int(0));
    }

    #[test]
    fn cstc_matches_c_determinant() {
        for n in 0..=4 {
            for x in 0..=4 {
                let c = build(MatrixName::C, n as usize, x, None).unwrap();
                assert_eq!(Rational::from_integer(cstc_closed(2 * n, 2 * x).unwrap()), determinant(&c).unwrap());
            }
        }
    }

    #[test]
    fn self_complementary_sequences() {
        let tssc: Vec<Integer> = [2, 4, 6, 8, 10].iter().map(|&s| tssc_closed(s).unwrap()).collect();
        assert_eq!(tssc, [1, 2, 7, 42, 429].map(int));
        assert_eq!(cssc_closed(4).unwrap(), int(4));
        assert_eq!(cssc_closed(2).unwrap(), int(1));
        assert!(tssc_closed(5).is_err());
        assert!(cssc_closed(0).is_err());
    }

    #[test]
    fn cssc_matches_w_determinant() {
        for n in 1..=5usize {
            let w = build(MatrixName::W, n - 1, 2, None).unwrap();
            assert_eq!(Rational::from_integer(cssc_closed(2 * n as i64).unwrap()), determinant(&w).unwrap());
        }
    }

    #[test]
    fn tc_examples() {
        assert_eq!(tc_closed(1, 4).unwrap(), int(1));
        assert_eq!(tc_closed(2, 0).unwrap(), int(1));
        assert_eq!(tc_closed(2, 1).unwrap(), int(2));
        assert_eq!(tc_closed(3, 1).unwrap(), int(5));
    }

    #[test]
    fn pp_and_sc_examples() {
        assert_eq!(macmahon_pp(3, 2, 0).unwrap(), int(1));
        assert_eq!(macmahon_pp(1, 1, 1).unwrap(), int(2));
        assert_eq!(macmahon_pp(2, 2, 2).unwrap(), int(20));
        assert_eq!(sc_closed(2, 2).unwrap(), int(4));
        assert_eq!(sc_closed(2, 3).unwrap(), int(6));
        assert_eq!(sc_closed(3, 2).unwrap(), int(9));
        assert_eq!(sc_closed(3, 3).unwrap(), int(0));
    }

    #[test]
    fn pp_symmetric_in_arguments() {
        for a in 0..=4 {
            for b in 0..=4 {
                for c in 0..=4 {
                    let v = macmahon_pp(a, b, c).unwrap();
                    assert_eq!(v, macmahon_pp(b, c, a).unwrap());
                    assert_eq!(v, macmahon_pp(b, a, c).unwrap());
                }
            }
        }
    }

    #[test]
    fn class_tags_round_trip() {
        for c in ClassTag::ALL {
            assert_eq!(c.name().parse::<ClassTag>().unwrap(), c);
        }
        assert!("bogus".parse::<ClassTag>().is_err());
    }
}
