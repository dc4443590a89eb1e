//! Dense rational matrices, builders for the named binomial/factorial matrix
//! families, and two exact determinant engines.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, reciprocal_factorial, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn from_fn<F>(n_rows: usize, n_cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Rational,
    {
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { n_rows, n_cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::domain("ragged rows"));
        }
        Ok(RationalMatrix { n_rows, n_cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n_cols + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        // chunks() rejects a zero chunk size.
        self.entries.chunks(self.n_cols.max(1)).take(self.n_rows)
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RationalMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.n_rows != other.n_rows || self.n_cols != other.n_cols {
            return Err(Error::domain("shape mismatch in matrix sum"));
        }
        Ok(Self::from_fn(self.n_rows, self.n_cols, |i, j| self.get(i, j) + other.get(i, j)))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::domain(format!("matrix is {}x{}, not square", self.n_rows, self.n_cols)))
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Named matrix families. `K` takes two parameters, the rest one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixName {
    /// `(x+y+i+j-1)! / ((x+2i-j)! (y+2j-i)!)`
    K,
    /// `C(x+i+j, i)`; `det(I + B)` counts cyclically symmetric tilings.
    B,
    /// `C(x+i+j, 2j-i)`
    C,
    /// `C(x+i+j, 2i-j) + 2 C(x+i+j+2, 2i-j+1)`
    R,
    /// `C(x+i+j+1, 2i-j+1) + C(x+i+j, 2i-j)`
    W,
    /// `C(x+i+j+1, 2i-j) + C(x+i+j, 2i-j-1)`
    LowerW,
}

impl MatrixName {
    pub fn symbol(self) -> &'static str {
        match self {
            MatrixName::K => "K",
            MatrixName::B => "B",
            MatrixName::C => "C",
            MatrixName::R => "R",
            MatrixName::W => "W",
            MatrixName::LowerW => "w",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        Some(match s {
            "K" => MatrixName::K,
            "B" => MatrixName::B,
            "C" => MatrixName::C,
            "R" => MatrixName::R,
            "W" => MatrixName::W,
            "w" => MatrixName::LowerW,
            _ => return None,
        })
    }
}

fn k_entry(x: i64, y: i64, i: i64, j: i64) -> Rational {
    let top = factorial(x + y + i + j - 1).expect("x + y > 0 keeps the numerator argument nonnegative");
    Rational::from_integer(top) * reciprocal_factorial(x + 2 * i - j) * reciprocal_factorial(y + 2 * j - i)
}

pub fn build(name: MatrixName, n: usize, x: i64, y: Option<i64>) -> Result<RationalMatrix> {
    let b = |m: i64, k: i64| Rational::from_integer(binomial(m, k));
    let m = match name {
        MatrixName::K => {
            let y = y.ok_or_else(|| Error::domain("matrix K needs both x and y"))?;
            if x + y <= 0 {
                return Err(Error::domain(format!("matrix K needs x + y > 0, got x={x}, y={y}")));
            }
            RationalMatrix::from_fn(n, n, |i, j| k_entry(x, y, i as i64, j as i64))
        }
        MatrixName::B => RationalMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            b(x + i + j, i)
        }),
        MatrixName::C => RationalMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            b(x + i + j, 2 * j - i)
        }),
        MatrixName::R => RationalMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            b(x + i + j, 2 * i - j) + Rational::from_integer(2.into()) * b(x + i + j + 2, 2 * i - j + 1)
        }),
        MatrixName::W => RationalMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            b(x + i + j + 1, 2 * i - j + 1) + b(x + i + j, 2 * i - j)
        }),
        MatrixName::LowerW => RationalMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            b(x + i + j + 1, 2 * i - j) + b(x + i + j, 2 * i - j - 1)
        }),
    };
    Ok(m)
}

/// Reference determinant: clear denominators row by row, then run
/// fraction-free (Bareiss) elimination over the integers.
pub fn determinant(m: &RationalMatrix) -> Result<Rational> {
    m.require_square()?;
    let n = m.n_rows();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &lcm;
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    Ok(Rational::new(sign * det, scale))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CondensationMethod {
    Condensation,
    /// A vanishing interior minor forced whole-matrix elimination instead.
    Fallback,
}

impl CondensationMethod {
    pub fn tag(self) -> &'static str {
        match self {
            CondensationMethod::Condensation => "condensation",
            CondensationMethod::Fallback => "fallback",
        }
    }
}

/// Determinant via the Desnanot–Jacobi recurrence on contiguous minors:
/// `det A = (A^0_0 A^{n-1}_{n-1} - A^{n-1}_0 A^0_{n-1}) / A^{0,n-1}_{0,n-1}`.
pub fn determinant_condensation(m: &RationalMatrix) -> Result<(Rational, CondensationMethod)> {
    m.require_square()?;
    let n = m.n_rows();
    if n == 0 {
        return Ok((Rational::one(), CondensationMethod::Condensation));
    }
    // minors[(size, i, j)] = det of the size x size block with top-left (i, j).
    let mut minors: HashMap<(usize, usize, usize), Rational> = HashMap::new();
    for i in 0..=n {
        for j in 0..=n {
            minors.insert((0, i, j), Rational::one());
        }
    }
    for i in 0..n {
        for j in 0..n {
            minors.insert((1, i, j), m.get(i, j).clone());
        }
    }
    for size in 2..=n {
        for i in 0..=n - size {
            for j in 0..=n - size {
                let divisor = &minors[&(size - 2, i + 1, j + 1)];
                if divisor.is_zero() {
                    return Ok((determinant(m)?, CondensationMethod::Fallback));
                }
                let top_left = &minors[&(size - 1, i, j)];
                let bottom_right = &minors[&(size - 1, i + 1, j + 1)];
                let top_right = &minors[&(size - 1, i, j + 1)];
                let bottom_left = &minors[&(size - 1, i + 1, j)];
                let v = (top_left * bottom_right - top_right * bottom_left) / divisor;
                minors.insert((size, i, j), v);
            }
        }
    }
    Ok((minors[&(n, 0, 0)].clone(), CondensationMethod::Condensation))
}

/// `det(I + M)`, i.e. the sum of all principal minors of `M`.
pub fn sum_principal_minors(m: &RationalMatrix) -> Result<Rational> {
    m.require_square()?;
    determinant(&m.add(&RationalMatrix::identity(m.n_rows()))?)
}

/// Principal minor of `m` on the index set `s`.
pub fn principal_minor(m: &RationalMatrix, s: &[usize]) -> Result<Rational> {
    m.require_square()?;
    if s.iter().any(|&i| i >= m.n_rows()) {
        return Err(Error::domain("principal minor index out of range"));
    }
    determinant(&m.select(s, s))
}

/// `Z_n(x) = det(I + B_n(x))`.
pub fn z_det(n: usize, x: i64) -> Rational {
    sum_principal_minors(&build(MatrixName::B, n, x, None).expect("B is total"))
        .expect("B is square")
}

/// `T_n(x) = det C_n(x)`.
pub fn t_det(n: usize, x: i64) -> Rational {
    determinant(&build(MatrixName::C, n, x, None).expect("C is total")).expect("C is square")
}

/// `R_n(x) = det R_n(x)`.
pub fn r_det(n: usize, x: i64) -> Rational {
    determinant(&build(MatrixName::R, n, x, None).expect("R is total")).expect("R is square")
}

pub fn det_of(name: MatrixName, n: usize, x: i64, y: Option<i64>) -> Result<Rational> {
    determinant(&build(name, n, x, y)?)
}

/// True when every entry is an integer and the matrix is nonnegative.
pub fn is_nonnegative_integral(m: &RationalMatrix) -> bool {
    m.rows().flatten().all(|v| v.is_integer() && !v.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, interpolate, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64_rows(rows).unwrap()
    }

    /// Cofactor expansion, independent of both engines.
    fn laplace(a: &RationalMatrix) -> Rational {
        let n = a.n_rows();
        if n == 0 {
            return rat(1);
        }
        let rows: Vec<usize> = (1..n).collect();
        (0..n)
            .map(|j| {
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
                sign * a.get(0, j) * laplace(&a.select(&rows, &cols))
            })
            .sum()
    }

    #[test]
    fn k_matrix_example() {
        let k = build(MatrixName::K, 2, 1, Some(1)).unwrap();
        let want = RationalMatrix::from_rows(vec![vec![rat(1), frac(1, 3)], vec![frac(1, 3), frac(3, 2)]]).unwrap();
        assert_eq!(k, want);
        assert_eq!(determinant(&k).unwrap(), frac(25, 18));
    }

    #[test]
    fn k_requires_valid_y() {
        assert!(build(MatrixName::K, 2, 1, None).is_err());
        assert!(build(MatrixName::K, 2, 0, Some(0)).is_err());
        // 1/(-1)! = 0 makes the (1,0) entry of K_2(1,0) vanish.
        let k = build(MatrixName::K, 2, 1, Some(0)).unwrap();
        assert_eq!(k.get(1, 0), &rat(0));
    }

    #[test]
    fn b_matrix_example() {
        assert_eq!(build(MatrixName::B, 2, 0, None).unwrap(), m(&[&[1, 1], &[1, 2]]));
    }

    #[test]
    fn lower_w_top_left_is_one() {
        for x in 0..6 {
            assert_eq!(build(MatrixName::LowerW, 1, x, None).unwrap(), m(&[&[1]]));
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])).unwrap(), rat(-2));
        assert_eq!(determinant(&RationalMatrix::identity(0)).unwrap(), rat(1));
        let non_square = RationalMatrix::from_fn(2, 3, |_, _| rat(1));
        assert!(determinant(&non_square).is_err());
    }

    #[test]
    fn condensation_examples() {
        let (v, tag) = determinant_condensation(&m(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!((v, tag), (rat(-2), CondensationMethod::Condensation));
        let (v, tag) = determinant_condensation(&m(&[&[1, 2, 3], &[4, 0, 6], &[7, 8, 9]])).unwrap();
        assert_eq!((v, tag), (rat(60), CondensationMethod::Fallback));
        let k3 = build(MatrixName::K, 3, 1, Some(1)).unwrap();
        let (v, tag) = determinant_condensation(&k3).unwrap();
        assert_eq!(tag, CondensationMethod::Condensation);
        assert_eq!(v, determinant(&k3).unwrap());
        assert!(determinant_condensation(&RationalMatrix::from_fn(1, 2, |_, _| rat(0))).is_err());
    }

    #[test]
    fn principal_minor_sums() {
        for x in 0..5 {
            assert_eq!(sum_principal_minors(&build(MatrixName::B, 1, x, None).unwrap()).unwrap(), rat(2));
        }
        assert_eq!(sum_principal_minors(&build(MatrixName::B, 2, 0, None).unwrap()).unwrap(), rat(5));
        assert_eq!(sum_principal_minors(&build(MatrixName::B, 3, 0, None).unwrap()).unwrap(), rat(20));
    }

    #[test]
    fn principal_minor_sum_matches_subset_enumeration() {
        let b = build(MatrixName::B, 4, 2, None).unwrap();
        let mut total = rat(0);
        for mask in 0u32..16 {
            let s: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
            total += principal_minor(&b, &s).unwrap();
        }
        assert_eq!(total, sum_principal_minors(&b).unwrap());
    }

    #[test]
    fn t_det_interpolates_with_degree_bound() {
        // det C_n(x) is a polynomial of degree <= n(n-1); sample one extra point.
        for n in 1..=4usize {
            let bound = n * (n - 1);
            let pts: Vec<_> = (0..=bound as i64).map(|x| (rat(x), t_det(n, x))).collect();
            let p = interpolate(&pts).unwrap();
            let probe = bound as i64 + 3;
            assert_eq!(p.eval(&rat(probe)), t_det(n, probe), "n={n}");
        }
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (0usize..5).prop_flat_map(|n| {
            proptest::collection::vec((-6i64..7, 1i64..4), n * n).prop_map(move |v| {
                RationalMatrix::from_fn(n, n, |i, j| {
                    let (p, q) = v[i * n + j];
                    frac(p, q)
                })
            })
        })
    }

    proptest! {
        #[test]
        fn engines_agree_with_cofactor_expansion(a in small_matrix()) {
            let reference = laplace(&a);
            prop_assert_eq!(&determinant(&a).unwrap(), &reference);
            let (v, _) = determinant_condensation(&a).unwrap();
            prop_assert_eq!(v, reference);
        }

        #[test]
        fn principal_sum_is_det_of_shift(a in small_matrix()) {
            let shifted = a.add(&RationalMatrix::identity(a.n_rows())).unwrap();
            prop_assert_eq!(sum_principal_minors(&a).unwrap(), laplace(&shifted));
        }
    }
}
