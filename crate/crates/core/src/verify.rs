//! Registry of checkable identities. Each identity is evaluated on both sides
//! by separate routes (brute-force tilings, lattice-path determinants, matrix
//! determinants, product formulas) and the two values are compared exactly.
//!
//! Brute force is used whenever the region involved has at most
//! [`BRUTE_CELLS`] cells (and fits the oracle budget); larger instances fall
//! back to a determinant or formula route that still differs from the other
//! side.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, frac, interpolate_fn, rat, Integer, Polynomial, Rational};
use crate::formulas::{
    cs_closed, cs_polynomial, cssc_closed, cstc_closed, det_k_closed, l_closed, macmahon_pp, sc_closed, tc_closed,
    tssc_closed, PentagonFormula,
};
use crate::lgvpaths::{lgv_count, path_system, region_lgv, SystemKind};
use crate::matchoracle::MatchOracle;
use crate::matrices::{
    build, determinant, determinant_condensation, sum_principal_minors, MatrixName, RationalMatrix,
};
use crate::regions::{
    cored_hexagon, hexagon, reflection_split, weighted_pentagon, PentagonKind, Region, Symmetry,
};

/// Largest region handed to the brute-force oracle by the registry.
pub const BRUTE_CELLS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    I2_2,
    I2_4,
    I2_5,
    I3_1,
    I3_2,
    I3_3,
    I3_4,
    I3_6,
    I4_1,
    I4_2,
    I4_6,
    I4_7,
    I4_5a,
    I4_5b,
    I5_1,
    I5_2,
    I5_3,
    I5_4,
    I5W,
    I5_5,
    I5_6,
    I5Ts,
    I6_1,
    I7_1,
    I7_2,
    I7_3,
    IBase,
    I2_2Poly,
    I4_7Poly,
}

use IdentityId::*;

impl IdentityId {
    pub const ALL: [IdentityId; 29] = [
        I2_2, I2_4, I2_5, I3_1, I3_2, I3_3, I3_4, I3_6, I4_1, I4_2, I4_6, I4_7, I4_5a, I4_5b, I5_1, I5_2, I5_3, I5_4,
        I5W, I5_5, I5_6, I5Ts, I6_1, I7_1, I7_2, I7_3, IBase, I2_2Poly, I4_7Poly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            I2_2 => "I2.2",
            I2_4 => "I2.4",
            I2_5 => "I2.5",
            I3_1 => "I3.1",
            I3_2 => "I3.2",
            I3_3 => "I3.3",
            I3_4 => "I3.4",
            I3_6 => "I3.6",
            I4_1 => "I4.1",
            I4_2 => "I4.2",
            I4_6 => "I4.6",
            I4_7 => "I4.7",
            I4_5a => "I4.5a",
            I4_5b => "I4.5b",
            I5_1 => "I5.1",
            I5_2 => "I5.2",
            I5_3 => "I5.3",
            I5_4 => "I5.4",
            I5W => "I5.W",
            I5_5 => "I5.5",
            I5_6 => "I5.6",
            I5Ts => "I5.TS",
            I6_1 => "I6.1",
            I7_1 => "I7.1",
            I7_2 => "I7.2",
            I7_3 => "I7.3",
            IBase => "IBASE",
            I2_2Poly => "I2.2-poly",
            I4_7Poly => "I4.7-poly",
        }
    }

    /// Parameter names, in the order used for sorting reports.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            I2_2 => &["n", "x", "y"],
            I3_3 | I2_2Poly | I4_7Poly | I5_1 | I5_2 | I5W | I5_6 | I5Ts => &["n"],
            I6_1 => &["a", "b"],
            I7_1 | I7_2 | I7_3 => &["x", "y"],
            IBase => &["a", "b", "c"],
            _ => &["n", "x"],
        }
    }

    /// Identities between polynomials in `x` rather than numbers.
    pub fn is_polynomial(self) -> bool {
        matches!(self, I3_3 | I2_2Poly | I4_7Poly)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown identity '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Number(Rational),
    Poly(Polynomial),
}

impl Value {
    /// Rationals as `p` or `p/q`; polynomials in the variable `x`.
    pub fn render(&self) -> String {
        match self {
            Value::Number(r) => format_rational(r),
            Value::Poly(p) => p.render("x"),
        }
    }

    fn bumped(self) -> Value {
        match self {
            Value::Number(r) => Value::Number(r + Rational::one()),
            Value::Poly(p) => Value::Poly(&p + &Polynomial::constant(Rational::one())),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Vec<(&'static str, i64)>,
    pub lhs: Value,
    pub rhs: Value,
    pub lhs_route: String,
    pub rhs_route: String,
    pub ok: bool,
}

impl IdentityReport {
    fn sort_key(&self) -> (IdentityId, Vec<i64>) {
        (self.id, self.params.iter().map(|p| p.1).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: i64,
    pub max_x: i64,
    pub max_y: i64,
}

struct Side {
    value: Rational,
    route: String,
}

fn side(value: Rational, route: impl Into<String>) -> Side {
    Side { value, route: route.into() }
}

fn int_rat(v: Integer) -> Rational {
    Rational::from_integer(v)
}

fn pow2(k: i64) -> Rational {
    int_rat(Integer::from(2).pow(k as u32))
}

fn need(cond: bool, id: IdentityId, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(format!("{id} needs {what}")))
    }
}

fn ratio(num: Side, den: Side) -> Result<Side> {
    if den.value.is_zero() {
        return Err(Error::domain(format!("ratio denominator vanishes ({})", den.route)));
    }
    Ok(side(num.value / den.value, format!("[{}] / [{}]", num.route, den.route)))
}

fn product(a: Side, b: Side) -> Side {
    side(a.value * b.value, format!("[{}] * [{}]", a.route, b.route))
}

fn scaled(c: Rational, s: Side) -> Side {
    side(&c * s.value, format!("{} * [{}]", format_rational(&c), s.route))
}

fn det_route(name: MatrixName, n: i64, x: i64, label: &str) -> Result<Side> {
    let m = build(name, n.max(0) as usize, x, None)?;
    Ok(side(determinant(&m)?, format!("det {label}_{n}({x})")))
}

fn z_route(n: i64, x: i64) -> Result<Side> {
    let m = RationalMatrix::identity(n as usize).add(&build(MatrixName::B, n as usize, x, None)?)?;
    Ok(side(determinant(&m)?, format!("det(I + B_{n}({x}))")))
}

fn pentagon_kind(kind: PentagonKind, n: i64, x: i64) -> SystemKind {
    match kind {
        PentagonKind::A => SystemKind::A { n, x },
        PentagonKind::B => SystemKind::B { n, x },
        PentagonKind::C => SystemKind::C { n, x },
    }
}

/// Evaluates identities with a given oracle configuration.
#[derive(Debug, Clone, Copy)]
pub struct Verifier {
    pub oracle: MatchOracle,
    pub brute_cells: usize,
    /// Test fixture: perturbs every right-hand side by one.
    pub inject_fault: bool,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier { oracle: MatchOracle::from_env(), brute_cells: BRUTE_CELLS, inject_fault: false }
    }
}

impl Verifier {
    fn small(&self, r: &Region) -> bool {
        !r.is_empty() && r.len() <= self.brute_cells.min(self.oracle.cell_budget)
    }

    fn brute_invariant(&self, region: &Region, syms: &[Symmetry], label: String) -> Result<Option<Side>> {
        if !self.small(region) {
            return Ok(None);
        }
        let names: Vec<&str> = syms.iter().map(|s| s.name()).collect();
        let count = self.oracle.count_invariant(region, &syms.iter().copied().collect())?;
        let what = if names.is_empty() { String::new() } else { format!("{{{}}}-invariant ", names.join(",")) };
        Ok(Some(side(int_rat(count), format!("brute {what}tilings of {label}"))))
    }

    /// `L` of a pentagon by brute force, or by its path determinant.
    fn pentagon(&self, kind: PentagonKind, n: i64, x: i64) -> Result<Side> {
        let region = weighted_pentagon(kind, n, x)?;
        let label = format!("{kind:?}_{{{n},{x}}}");
        if self.small(&region) {
            return Ok(side(self.oracle.tiling_gen_fn(&region)?, format!("brute L({label})")));
        }
        let value = lgv_count(&path_system(&pentagon_kind(kind, n, x))?)?;
        Ok(side(value, format!("LGV determinant for {label}")))
    }

    /// `CS(n, x)`: brute force on `H_{n,x}`, else `det(I + B)`.
    fn cs_count(&self, n: i64, x: i64) -> Result<Side> {
        if n == 0 {
            return Ok(side(rat(1), "empty region"));
        }
        let region = cored_hexagon(n, x)?;
        match self.brute_invariant(&region, &[Symmetry::R], format!("H_{{{n},{x}}}"))? {
            Some(s) => Ok(s),
            None => z_route(n, x),
        }
    }

    /// `CSTC(2n, 2x)`: brute force on `H_{2n,2x}`, else `T_n(x)`.
    fn cstc_count(&self, n: i64, x: i64) -> Result<Side> {
        if n == 0 {
            return Ok(side(rat(1), "empty region"));
        }
        let region = cored_hexagon(2 * n, 2 * x)?;
        let label = format!("H_{{{},{}}}", 2 * n, 2 * x);
        match self.brute_invariant(&region, &[Symmetry::R, Symmetry::TPrime], label)? {
            Some(s) => Ok(s),
            None => det_route(MatrixName::C, n, x, "C"),
        }
    }

    /// `CSSC(2n)`: brute force on `H(2n,2n,2n)`, else `fallback`.
    fn cssc_count(&self, n: i64, fallback: impl FnOnce() -> Result<Side>) -> Result<Side> {
        let m = 2 * n;
        let region = hexagon(m, m, m)?;
        match self.brute_invariant(&region, &[Symmetry::R, Symmetry::K], format!("H({m},{m},{m})"))? {
            Some(s) => Ok(s),
            None => fallback(),
        }
    }

    /// `PP(a, b, c)` as the path determinant of `H(a, b, c)`.
    fn pp_paths(&self, a: i64, b: i64, c: i64) -> Result<Side> {
        if a == 0 || b == 0 || c == 0 {
            return Ok(side(rat(1), format!("H({a},{b},{c}) has one tiling")));
        }
        Ok(side(region_lgv(&hexagon(a, b, c)?)?, format!("LGV determinant for H({a},{b},{c})")))
    }

    /// `SC(a, a, c)`: brute force, else the closed form.
    fn sc_count(&self, a: i64, c: i64) -> Result<Side> {
        if a == 0 || c == 0 {
            return Ok(side(rat(1), format!("H({a},{a},{c}) has one tiling")));
        }
        let region = hexagon(a, a, c)?;
        match self.brute_invariant(&region, &[Symmetry::K], format!("H({a},{a},{c})"))? {
            Some(s) => Ok(s),
            None => Ok(side(int_rat(sc_closed(a, c)?), format!("SC({a},{a},{c}) product formula"))),
        }
    }

    /// Evaluates one identity at the given parameters.
    pub fn check(&self, id: IdentityId, params: &BTreeMap<String, i64>) -> Result<IdentityReport> {
        let vals = id
            .param_names()
            .iter()
            .map(|name| params.get(*name).copied().ok_or_else(|| Error::domain(format!("{id} needs parameter '{name}'"))))
            .collect::<Result<Vec<i64>>>()?;
        self.check_values(id, &vals)
    }

    /// Same as [`Verifier::check`] with parameters in signature order.
    pub fn check_values(&self, id: IdentityId, vals: &[i64]) -> Result<IdentityReport> {
        if vals.len() != id.param_names().len() {
            return Err(Error::domain(format!("{id} takes parameters {:?}", id.param_names())));
        }
        if id.is_polynomial() {
            return self.check_poly(id, vals[0]);
        }
        let (lhs, rhs) = self.sides(id, vals)?;
        Ok(self.report(id, vals, Value::Number(lhs.value), Value::Number(rhs.value), lhs.route, rhs.route))
    }

    fn report(&self, id: IdentityId, vals: &[i64], lhs: Value, rhs: Value, lr: String, rr: String) -> IdentityReport {
        let rhs = if self.inject_fault { rhs.bumped() } else { rhs };
        IdentityReport {
            id,
            params: id.param_names().iter().copied().zip(vals.iter().copied()).collect(),
            ok: lhs == rhs,
            lhs,
            rhs,
            lhs_route: lr,
            rhs_route: rr,
        }
    }

    fn sides(&self, id: IdentityId, v: &[i64]) -> Result<(Side, Side)> {
        let p = |i: usize| v[i];
        match id {
            I2_2 => {
                let (n, x, y) = (p(0), p(1), p(2));
                need(n >= 0 && x >= 0 && y >= 0 && x + y > 0, id, "n, x, y >= 0 and x + y > 0")?;
                let brute = if y == 0 && n >= 1 {
                    let region = weighted_pentagon(PentagonKind::A, n, x)?;
                    self.small(&region).then_some(region)
                } else {
                    None
                };
                let lhs = match brute {
                    Some(region) => {
                        let scale: Rational = (0..n).map(|i| frac(2, x + 3 * i)).product();
                        side(
                            self.oracle.tiling_gen_fn(&region)? * scale,
                            format!("brute L(A_{{{n},{x}}}) * 2^{n} / prod(x + 3i)"),
                        )
                    }
                    None => {
                        let (value, how) = determinant_condensation(&build(MatrixName::K, n as usize, x, Some(y))?)?;
                        side(value, format!("condensation ({}) of K_{n}({x},{y})", how.tag()))
                    }
                };
                Ok((lhs, side(det_k_closed(n, x, y)?, "detK product formula")))
            }
            I2_4 | I2_5 => {
                let (n, x) = (p(0), p(1));
                need(n >= 1 && x >= 1, id, "n >= 1 and x >= 1")?;
                let (kind, formula) = if id == I2_4 {
                    (PentagonKind::A, PentagonFormula::A)
                } else {
                    (PentagonKind::B, PentagonFormula::B)
                };
                Ok((self.pentagon(kind, n, x)?, side(l_closed(formula, n, x)?, "pentagon product formula")))
            }
            I3_1 => {
                let (n, x) = (p(0), p(1));
                need(n >= 1 && x >= 0, id, "n >= 1 and x >= 0")?;
                let region = cored_hexagon(n, x)?;
                let lhs = match self.brute_invariant(&region, &[Symmetry::R], format!("H_{{{n},{x}}}"))? {
                    Some(s) => s,
                    None => {
                        let mut total = Rational::zero();
                        for mask in 0u64..(1 << n) {
                            let set = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                            total += lgv_count(&path_system(&SystemKind::Minor { n, x, set })?)?;
                        }
                        side(total, "sum of LGV path counts over index sets")
                    }
                };
                let b = build(MatrixName::B, n as usize, x, None)?;
                Ok((lhs, side(sum_principal_minors(&b)?, format!("sum of principal minors of B_{n}({x})"))))
            }
            I3_2 => {
                let (n, x) = (p(0), p(1));
                need(n >= 1 && x >= 3 && x % 2 == 1, id, "n >= 1 and odd x >= 3")?;
                let which = if n % 2 == 0 { "even" } else { "odd" };
                let lhs = side(int_rat(cs_closed(n, x)?), format!("CS product formula ({which} n)"));
                Ok((lhs, self.cs_count(n, x)?))
            }
            I3_4 | I3_6 => {
                let (n, x) = (p(0), p(1));
                need(n >= 1 && x >= 1, id, "n >= 1 and x >= 1")?;
                let (cs_n, a_n, k) = if id == I3_4 { (2 * n, n + 1, 2 * n + 1) } else { (2 * n - 1, n, 2 * n) };
                let lhs = self.cs_count(cs_n, 2 * x + 1)?;
                let la = self.pentagon(PentagonKind::A, a_n, x)?;
                let lb = self.pentagon(PentagonKind::B, n, x + 1)?;
                Ok((lhs, scaled(pow2(k), product(la, lb))))
            }
            I4_1 => {
                let (n, x) = (p(0), p(1));
                need(n >= 1 && x >= 0, id, "n >= 1 and x >= 0")?;
                let region = cored_hexagon(2 * n, 2 * x)?;
                let label = format!("H_{{{},{}}}", 2 * n, 2 * x);
                let lhs = match self.brute_invariant(&region, &[Symmetry::R, Symmetry::TPrime], label)? {
                    Some(s) => s,
                    None => side(int_rat(cstc_closed(2 * n, 2 * x)?), "CSTC product of CS ratios"),
                };
                Ok((lhs, self.pentagon(PentagonKind::C, n, x)?))
            }
            I4_2 => {
                let (n, x) = (p(0), p(1));
                need(n >= 0 && x >= 0, id, "n, x >= 0")?;
                let lhs = scaled(rat(2), ratio(self.cstc_count(n + 1, x)?, self.cstc_count(n, x)?)?);
                let cs = |m: i64| -> Result<Side> {
                    Ok(side(int_rat(cs_closed(m, 2 * x)?), format!("CS({m},{}) formula", 2 * x)))
                };
                Ok((lhs, ratio(cs(2 * n + 1)?, cs(2 * n)?)?))
            }
            I4_6 => {
                let (n, x) = (p(0), p(1));
                need(n >= 0 && x >= 0, id, "n, x >= 0")?;
                let rhs = side(int_rat(cstc_closed(2 * n, 2 * x)?), "CSTC product of CS ratios");
                Ok((self.cstc_count(n, x)?, rhs))
            }
            I4_7 => {
                let (n, x) = (p(0), p(1));
                need(n >= 1 && x >= 0, id, "n >= 1 and x >= 0")?;
                Ok((det_route(MatrixName::C, n, x, "C")?, self.pentagon(PentagonKind::C, n, x)?))
            }
            I4_5a | I4_5b => {
                let (n, x) = (p(0), p(1));
                need(n >= 0 && x >= 0, id, "n, x >= 0")?;
                let r = det_route(MatrixName::R, n, x, "R")?;
                if id == I4_5a {
                    need(n >= 1, id, "n >= 1")?;
                    Ok((self.cs_count(2 * n, 2 * x)?, product(det_route(MatrixName::C, n, x, "C")?, r)))
                } else {
                    let t = det_route(MatrixName::C, n + 1, x, "C")?;
                    Ok((self.cs_count(2 * n + 1, 2 * x)?, scaled(rat(2), product(t, r))))
                }
            }
            I5_1 | I5W | I5Ts => {
                let n = p(0);
                need(n >= 1, id, "n >= 1")?;
                let w = || det_route(MatrixName::W, n - 1, 2, "W");
                let closed = || Ok(side(int_rat(cssc_closed(2 * n)?), "CSSC product formula"));
                match id {
                    I5_1 => Ok((self.cssc_count(n, w)?, closed()?)),
                    I5W => Ok((w()?, self.cssc_count(n, closed)?)),
                    _ => {
                        let m = 2 * n;
                        let region = hexagon(m, m, m)?;
                        let label = format!("H({m},{m},{m})");
                        let ts = match self.brute_invariant(&region, &[Symmetry::R, Symmetry::T, Symmetry::K], label)? {
                            Some(s) => s,
                            None => side(int_rat(tssc_closed(m)?), "TSSC product formula"),
                        };
                        Ok((self.cssc_count(n, w)?, product(ts.clone_side(), ts)))
                    }
                }
            }
            I5_2 => {
                let n = p(0);
                need(n >= 1, id, "n >= 1")?;
                let lhs = self.cssc_count(n, || Ok(side(int_rat(cssc_closed(2 * n)?), "CSSC product formula")))?;
                Ok((lhs, scaled(pow2(n), self.pentagon(PentagonKind::A, n, 1)?)))
            }
            I5_3 | I5_4 => {
                let (n, x) = (p(0), p(1));
                need(n >= 1 && x >= 0, id, "n >= 1 and x >= 0")?;
                let w_small = build(MatrixName::LowerW, n as usize, x, None)?;
                let via_paths = || -> Result<Side> { Ok(scaled(pow2(n), self.pentagon(PentagonKind::A, n, x + 1)?)) };
                if id == I5_4 {
                    return Ok((side(determinant(&w_small)?, format!("det w_{n}({x})")), via_paths()?));
                }
                let lhs = det_route(MatrixName::W, n - 1, x + 2, "W")?;
                let pentagon_small = self.small(&weighted_pentagon(PentagonKind::A, n, x + 1)?);
                let rhs = if pentagon_small {
                    let s = via_paths()?;
                    side(s.value, format!("det w_{n}({x}) as {}", s.route))
                } else {
                    let (value, how) = determinant_condensation(&w_small)?;
                    side(value, format!("condensation ({}) of w_{n}({x})", how.tag()))
                };
                Ok((lhs, rhs))
            }
            I5_5 => {
                let (n, x) = (p(0), p(1));
                need(n >= 1 && x >= 0, id, "n >= 1 and x >= 0")?;
                let lhs = ratio(self.cs_count(2 * n, 2 * x + 1)?, self.cs_count(2 * n - 1, 2 * x + 1)?)?;
                let rhs = ratio(self.pentagon(PentagonKind::A, n + 1, x)?, self.pentagon(PentagonKind::A, n, x)?)?;
                Ok((lhs, scaled(rat(2), rhs)))
            }
            I5_6 => {
                let n = p(0);
                need(n >= 1, id, "n >= 1")?;
                let closed = |k: i64| move || Ok(side(int_rat(cssc_closed(2 * k)?), format!("CSSC({}) formula", 2 * k)));
                let lhs = ratio(self.cssc_count(n + 1, closed(n + 1))?, self.cssc_count(n, closed(n))?)?;
                let cs = |m: i64| -> Result<Side> {
                    match self.brute_invariant(&cored_hexagon(m, 3)?, &[Symmetry::R], format!("H_{{{m},3}}"))? {
                        Some(s) => Ok(s),
                        None => Ok(side(int_rat(cs_closed(m, 3)?), format!("CS({m},3) formula"))),
                    }
                };
                Ok((lhs, ratio(cs(2 * n)?, cs(2 * n - 1)?)?))
            }
            I6_1 => {
                let (a, b) = (p(0), p(1));
                need(a >= 1 && b >= 0, id, "a >= 1 and b >= 0")?;
                let lhs = side(int_rat(tc_closed(a, b)?), "TC product formula");
                let region = hexagon(a, a, 2 * b)?;
                let label = format!("H({a},{a},{})", 2 * b);
                let rhs = match self.brute_invariant(&region, &[Symmetry::TPrime], label.clone())? {
                    Some(s) => s,
                    None => {
                        let (axis, half) = reflection_split(&region, Symmetry::TPrime)?;
                        let value = region_lgv(&axis)? * region_lgv(&half)?;
                        side(value, format!("LGV determinant for half of {label}"))
                    }
                };
                Ok((lhs, rhs))
            }
            I7_1 | I7_2 | I7_3 => {
                let (x, y) = (p(0), p(1));
                need(x >= 0 && y >= 0, id, "x, y >= 0")?;
                let (a, c, pp1, pp2) = match id {
                    I7_1 => (2 * x, 2 * y, (x, x, y), (x, x, y)),
                    I7_2 => (2 * x, 2 * y + 1, (x, x, y), (x, x, y + 1)),
                    _ => (2 * x + 1, 2 * y, (x, x + 1, y), (x, x + 1, y)),
                };
                let rhs = product(self.pp_paths(pp1.0, pp1.1, pp1.2)?, self.pp_paths(pp2.0, pp2.1, pp2.2)?);
                Ok((self.sc_count(a, c)?, rhs))
            }
            IBase => {
                let (a, b, c) = (p(0), p(1), p(2));
                need(a >= 0 && b >= 0 && c >= 0, id, "a, b, c >= 0")?;
                let lhs = if a == 0 || b == 0 || c == 0 {
                    side(rat(1), format!("H({a},{b},{c}) has one tiling"))
                } else {
                    let region = hexagon(a, b, c)?;
                    match self.brute_invariant(&region, &[], format!("H({a},{b},{c})"))? {
                        Some(s) => s,
                        None => self.pp_paths(a, b, c)?,
                    }
                };
                Ok((lhs, side(int_rat(macmahon_pp(a, b, c)?), "MacMahon box formula")))
            }
            I3_3 | I2_2Poly | I4_7Poly => unreachable!("polynomial identities are handled by check_poly"),
        }
    }

    /// Checks a polynomial identity in `x` for the given size `n`.
    pub fn check_poly(&self, id: IdentityId, n: i64) -> Result<IdentityReport> {
        need(id.is_polynomial(), id, "to be a polynomial identity")?;
        need(n >= 1, id, "n >= 1")?;
        let degree = (n * (n - 1)) as usize;
        let (lhs, rhs, lr, rr) = match id {
            I3_3 => {
                // P_n((x - 1)/2) against Z_n(x).
                let half_shift = Polynomial::new(vec![frac(-1, 2), frac(1, 2)]);
                let lhs = cs_polynomial(n)?.compose(&half_shift);
                let d = degree / 2;
                let brute = (0..=d as i64).all(|x| cored_hexagon(n, x).map(|r| self.small(&r)).unwrap_or(false));
                let rhs = interpolate_fn(d, |x| Ok(if brute { self.cs_count(n, x)?.value } else { z_route(n, x)?.value }))?;
                let rr = if brute { "brute r-invariant counts of H_{n,x}" } else { "det(I + B_n(x))" };
                (lhs, rhs, "P_n((x-1)/2) from the CS product formula", format!("{rr}, interpolated at x = 0..={d}"))
            }
            I2_2Poly => {
                let lhs = interpolate_fn(degree, |x| determinant(&build(MatrixName::LowerW, n as usize, x, None)?))?;
                let rhs = interpolate_fn(degree, |x| {
                    let lin: Rational = (0..n).map(|i| rat(x + 3 * i + 1)).product();
                    Ok(lin * det_k_closed(n, x + 1, 0)?)
                })?;
                let rr = format!("prod(x + 3i + 1) * detK(n, x + 1, 0) product formula, interpolated at x = 0..={degree}");
                (lhs, rhs, "det w_n(x), interpolated", rr)
            }
            _ => {
                let lhs = interpolate_fn(degree, |x| Ok(det_route(MatrixName::C, n, x, "C")?.value))?;
                let mut brute = false;
                let rhs = interpolate_fn(degree, |x| {
                    let s = self.pentagon(PentagonKind::C, n, x)?;
                    brute |= s.route.starts_with("brute");
                    Ok(s.value)
                })?;
                let how = if brute { "brute force where small, else paths" } else { "LGV determinants" };
                let rr = format!("L(C_{{n,x}}) by {how}, interpolated at x = 0..={degree}");
                (lhs, rhs, "det C_n(x), interpolated", rr)
            }
        };
        Ok(self.report(id, &[n], Value::Poly(lhs), Value::Poly(rhs), lr.to_string(), rr))
    }

    /// Every registered identity over the parameter box, sorted by
    /// `(id, params)`.
    pub fn run_suite(&self, bounds: Bounds) -> Result<Vec<IdentityReport>> {
        let mut reports = Vec::new();
        for (id, vals) in suite_instances(bounds) {
            reports.push(self.check_values(id, &vals)?);
        }
        reports.sort_by_key(|r| r.sort_key());
        Ok(reports)
    }
}

impl Side {
    fn clone_side(&self) -> Side {
        side(self.value.clone(), self.route.clone())
    }
}

/// Parameter tuples visited by [`Verifier::run_suite`].
///
/// Identities stated for `CS(2n, 2x+1)`-type arguments are sampled over the
/// box in their own `(n, x)`; `I3.2` takes the cored-hexagon arguments
/// directly and visits `n <= 2 max_n` and odd `x` in `3..=2 max_x + 1`.
pub fn suite_instances(bounds: Bounds) -> Vec<(IdentityId, Vec<i64>)> {
    let Bounds { max_n, max_x, max_y } = bounds;
    let mut out = Vec::new();
    if max_n <= 0 {
        return out;
    }
    let ns = 1..=max_n;
    let xs = 0..=max_x.max(0);
    for id in IdentityId::ALL {
        if id.param_names().len() == 1 {
            out.extend(ns.clone().map(|n| (id, vec![n])));
        }
        match id {
            I2_2 => {
                for n in ns.clone() {
                    for x in xs.clone() {
                        for y in 0..=max_y.max(0) {
                            if x + y > 0 {
                                out.push((id, vec![n, x, y]));
                            }
                        }
                    }
                }
            }
            I2_4 | I2_5 | I3_4 | I3_6 => {
                for n in ns.clone() {
                    for x in 1..=max_x {
                        out.push((id, vec![n, x]));
                    }
                }
            }
            I3_2 => {
                for n in 1..=2 * max_n {
                    for k in 1..=max_x.max(1) {
                        out.push((id, vec![n, 2 * k + 1]));
                    }
                }
            }
            I3_1 | I4_1 | I4_2 | I4_6 | I4_7 | I4_5a | I4_5b | I5_3 | I5_4 | I5_5 => {
                for n in ns.clone() {
                    for x in xs.clone() {
                        out.push((id, vec![n, x]));
                    }
                }
            }
            I6_1 => {
                for a in 1..=max_n + 1 {
                    for b in xs.clone() {
                        out.push((id, vec![a, b]));
                    }
                }
            }
            I7_1 | I7_2 | I7_3 => {
                for x in ns.clone() {
                    for y in 0..=max_y.max(0) {
                        out.push((id, vec![x, y]));
                    }
                }
            }
            IBase => {
                let top = max_n + 1;
                for a in 0..=top {
                    for b in 0..=top {
                        for c in 0..=top {
                            out.push((id, vec![a, b, c]));
                        }
                    }
                }
            }
            _ => {}
        }
    }
    out
}

pub fn check_identity(id: IdentityId, params: &BTreeMap<String, i64>) -> Result<IdentityReport> {
    Verifier::default().check(id, params)
}

pub fn check_poly_identity(id: IdentityId, n: i64) -> Result<IdentityReport> {
    Verifier::default().check_poly(id, n)
}

pub fn run_suite(bounds: Bounds) -> Result<Vec<IdentityReport>> {
    Verifier::default().run_suite(bounds)
}
