//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use hexatile::exactnum::{frac, int, interpolate_fn, rat, Polynomial, Rational};
use hexatile::formulas::{
    cs_closed, cs_polynomial, cssc_closed, cstc_closed, det_k_closed, l_closed, macmahon_pp, sc_closed, tc_closed,
    tssc_closed, PentagonFormula,
};
use hexatile::lgvpaths::{brute_families, lgv_count, path_system, SystemKind};
use hexatile::matchoracle::{count_invariant, tiling_gen_fn};
use hexatile::matrices::{build, determinant, determinant_condensation, sum_principal_minors, MatrixName, RationalMatrix};
use hexatile::regions::{cored_hexagon, hexagon, weighted_pentagon, PentagonKind, Symmetry};
use hexatile::verify::{IdentityId, Value, Verifier};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn int_rat(v: hexatile::exactnum::Integer) -> Rational {
    Rational::from_integer(v)
}

fn det(name: MatrixName, n: i64, x: i64) -> Rational {
    determinant(&build(name, n as usize, x, None).unwrap()).unwrap()
}

fn z(n: i64, x: i64) -> Rational {
    let b = build(MatrixName::B, n as usize, x, None).unwrap();
    determinant(&RationalMatrix::identity(n as usize).add(&b).unwrap()).unwrap()
}

fn verify(id: IdentityId, vals: &[i64]) -> Check {
    let r = Verifier::default().check_values(id, vals).map_err(|e| format!("{id} {vals:?}: {e}"))?;
    ensure(r.ok, || format!("{id} {vals:?}: {} vs {}", r.lhs, r.rhs))
}

fn c1_determinants() -> Check {
    let mut count = 0;
    for n in 0..=6i64 {
        for x in 0..=4 {
            for y in 0..=4 {
                if x + y == 0 {
                    continue;
                }
                let k = build(MatrixName::K, n as usize, x, Some(y)).unwrap();
                let bareiss = determinant(&k).unwrap();
                let (cond, _) = determinant_condensation(&k).unwrap();
                let closed = det_k_closed(n, x, y).unwrap();
                ensure(bareiss == closed && cond == closed, || format!("K_{n}({x},{y}): {bareiss} {cond} {closed}"))?;
                count += 1;
            }
        }
    }
    ensure(count == 168, || format!("ran {count} instances"))
}

fn c2_pentagons() -> Check {
    for n in 1..=3 {
        for x in 1..=3 {
            for (pk, sk, f) in [
                (PentagonKind::A, SystemKind::A { n, x }, PentagonFormula::A),
                (PentagonKind::B, SystemKind::B { n, x }, PentagonFormula::B),
            ] {
                let sys = path_system(&sk).unwrap();
                let lgv = lgv_count(&sys).unwrap();
                let families = brute_families(&sys).unwrap();
                let tilings = tiling_gen_fn(&weighted_pentagon(pk, n, x).unwrap()).unwrap();
                let closed = l_closed(f, n, x).unwrap();
                ensure(lgv == closed && families == closed && tilings == closed, || {
                    format!("{pk:?}_{{{n},{x}}}: lgv {lgv}, families {families}, tilings {tilings}, closed {closed}")
                })?;
            }
        }
    }
    let a11 = tiling_gen_fn(&weighted_pentagon(PentagonKind::A, 1, 1).unwrap()).unwrap();
    ensure(a11 == frac(1, 2), || format!("L(A_1,1) = {a11}"))?;
    for x in 1..=3 {
        let b = tiling_gen_fn(&weighted_pentagon(PentagonKind::B, 1, x).unwrap()).unwrap();
        ensure(b == rat(1), || format!("L(B_1,{x}) = {b}"))?;
    }
    Ok(())
}

fn c3_cyclic_lemma() -> Check {
    let mut cases: Vec<(i64, i64)> = (1..=2).flat_map(|n| (0..=2).map(move |x| (n, x))).collect();
    cases.push((3, 0));
    for (n, x) in cases {
        let brute = int_rat(count_invariant(&cored_hexagon(n, x).unwrap(), &[Symmetry::R]).unwrap());
        let minors = sum_principal_minors(&build(MatrixName::B, n as usize, x, None).unwrap()).unwrap();
        ensure(brute == minors, || format!("H_{{{n},{x}}}: brute {brute}, minors {minors}"))?;
        if (n, x) == (3, 0) {
            ensure(brute == rat(20), || format!("H_{{3,0}} brute {brute}"))?;
        }
    }
    Ok(())
}

fn c4_cs_spot_values() -> Check {
    for (n, x, want) in [(1, 3, 2), (2, 3, 8)] {
        let formula = int_rat(cs_closed(n, x).unwrap());
        let minors = sum_principal_minors(&build(MatrixName::B, n as usize, x, None).unwrap()).unwrap();
        ensure(formula == rat(want) && minors == rat(want), || format!("CS({n},{x}): {formula} vs {minors}"))?;
    }
    Ok(())
}

fn c5_cs_polynomial() -> Check {
    let v = Verifier::default();
    for n in 1..=4 {
        let r = v.check_poly(IdentityId::I3_3, n).map_err(|e| e.to_string())?;
        ensure(r.ok, || format!("n = {n}: {} vs {}", r.lhs, r.rhs))?;
    }
    let p2 = cs_polynomial(2).unwrap();
    ensure(p2 == Polynomial::from_ints(&[6, 2]), || format!("P_2 = {p2}"))?;
    let z2 = interpolate_fn(1, |x| Ok(z(2, x))).unwrap();
    ensure(z2 == Polynomial::from_ints(&[5, 1]), || format!("Z_2 = {z2}"))?;
    let r = v.check_poly(IdentityId::I3_3, 2).unwrap();
    ensure(r.lhs == Value::Poly(z2), || format!("P_2((x-1)/2) = {}", r.lhs))
}

fn c6_cstc() -> Check {
    let closed = int_rat(cstc_closed(4, 2).unwrap());
    let det_c = det(MatrixName::C, 2, 1);
    let pentagon = tiling_gen_fn(&weighted_pentagon(PentagonKind::C, 2, 1).unwrap()).unwrap();
    let brute = int_rat(count_invariant(&cored_hexagon(4, 2).unwrap(), &[Symmetry::R, Symmetry::TPrime]).unwrap());
    ensure(closed == rat(3) && det_c == closed && pentagon == closed && brute == closed, || {
        format!("CSTC(4,2): closed {closed}, det C {det_c}, L(C_2,1) {pentagon}, brute {brute}")
    })?;
    for n in 0..=2 {
        for x in 0..=2 {
            verify(IdentityId::I4_2, &[n, x])?;
        }
    }
    Ok(())
}

fn c7_z_factorizations() -> Check {
    for n in 0..=4 {
        for x in 0..=4 {
            if n >= 1 {
                let (l, r) = (z(2 * n, 2 * x), det(MatrixName::C, n, x) * det(MatrixName::R, n, x));
                ensure(l == r, || format!("Z_{}({}) = {l}, T R = {r}", 2 * n, 2 * x))?;
            }
            let (l, r) = (z(2 * n + 1, 2 * x), rat(2) * det(MatrixName::C, n + 1, x) * det(MatrixName::R, n, x));
            ensure(l == r, || format!("Z_{}({}) = {l}, 2 T R = {r}", 2 * n + 1, 2 * x))?;
        }
    }
    Ok(())
}

fn c8_self_complementary() -> Check {
    let ts: Vec<_> = [2, 4, 6, 8].iter().map(|&s| tssc_closed(s).unwrap()).collect();
    ensure(ts == [1, 2, 7, 42].map(int), || format!("TSSC = {ts:?}"))?;
    for n in 1..=4 {
        let cssc = cssc_closed(2 * n).unwrap();
        let w = det(MatrixName::W, n - 1, 2);
        let ts = tssc_closed(2 * n).unwrap();
        ensure(cssc == &ts * &ts && int_rat(cssc.clone()) == w, || format!("CSSC({}) = {cssc}, det W = {w}", 2 * n))?;
    }
    for (size, want) in [(2, 1), (4, 4)] {
        let brute = count_invariant(&hexagon(size, size, size).unwrap(), &[Symmetry::R, Symmetry::K]).unwrap();
        ensure(brute == int(want), || format!("{{r,k}} on H({size},{size},{size}) = {brute}"))?;
    }
    for n in 1..=2 {
        verify(IdentityId::I5_6, &[n])?;
    }
    Ok(())
}

fn c9_transpose_complementary() -> Check {
    for (a, b) in [(2, 1), (3, 1), (2, 2)] {
        let brute = count_invariant(&hexagon(a, a, 2 * b).unwrap(), &[Symmetry::TPrime]).unwrap();
        let closed = tc_closed(a, b).unwrap();
        ensure(brute == closed, || format!("TC({a},{b}): brute {brute}, closed {closed}"))?;
    }
    ensure(tc_closed(2, 1).unwrap() == int(2) && tc_closed(3, 1).unwrap() == int(5), || "TC spot values".into())
}

fn c10_self_complementary_sc() -> Check {
    for (a, c, want) in [(2, 2, 4), (2, 3, 6), (3, 2, 9)] {
        let brute = count_invariant(&hexagon(a, a, c).unwrap(), &[Symmetry::K]).unwrap();
        let closed = sc_closed(a, c).unwrap();
        ensure(brute == closed && closed == int(want), || format!("SC({a},{a},{c}): brute {brute}, closed {closed}"))?;
    }
    Ok(())
}

fn c11_base_case() -> Check {
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let pp = macmahon_pp(a, b, c).unwrap();
                let brute = if a + b + c == 0 { int(1) } else { count_invariant(&hexagon(a, b, c).unwrap(), &[]).unwrap() };
                ensure(brute == pp, || format!("H({a},{b},{c}): brute {brute}, PP {pp}"))?;
            }
        }
    }
    Ok(())
}

fn c12_falsifiability() -> Check {
    let faulty = Verifier { inject_fault: true, ..Verifier::default() };
    let params: BTreeMap<String, i64> = [("n".to_string(), 1), ("x".to_string(), 3)].into();
    let r = faulty.check(IdentityId::I4_5a, &params).map_err(|e| e.to_string())?;
    ensure(!r.ok && r.lhs == Value::Number(rat(11)) && r.rhs == Value::Number(rat(12)), || {
        format!("perturbed report: ok={} lhs={} rhs={}", r.ok, r.lhs, r.rhs)
    })?;
    let out = Command::new(env!("CARGO_BIN_EXE_hexatile"))
        .args(["verify", "--id", "I4.5a", "--n", "1", "--x", "3", "--json", "--inject-fault"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(1), || format!("exit code {:?}", out.status.code()))?;
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(doc[0]["ok"] == false && doc[0]["lhs"] == "11" && doc[0]["rhs"] == "12", || format!("report {doc}"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("determinant cross-check of K_n(x,y)", c1_determinants),
        ("pentagon generating functions by LGV, brute force and closed form", c2_pentagons),
        ("cyclically symmetric counts equal det(I+B)", c3_cyclic_lemma),
        ("CS spot values from the product formulas", c4_cs_spot_values),
        ("CS polynomial identity for n <= 4", c5_cs_polynomial),
        ("CSTC(4,2) = 3 by four routes and the CSTC ratio identity", c6_cstc),
        ("Z factorizations into T and R", c7_z_factorizations),
        ("self-complementary classes CSSC and TSSC", c8_self_complementary),
        ("transpose-complementary counts", c9_transpose_complementary),
        ("self-complementary counts of H(a,a,c)", c10_self_complementary_sc),
        ("base case brute force equals MacMahon", c11_base_case),
        ("falsifiability through the CLI", c12_falsifiability),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 12 criteria pass");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
