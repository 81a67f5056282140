//! Acceptance criteria. One line per criterion; a failing criterion is
//! printed with its first counterexample.
//!
//! The Killing-signature criterion fails on `p + q = 2` (see `ac9`); the
//! run is green only if that is the *exact* failure set.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Zero};

use dualcon::contraction::{
    check_equivalence_witness, complements_agree, generalized_iw_contract, iw_contract, ContractionLimit,
    Decomposition,
};
use dualcon::family::{contraction_family, fiber_isomorphism_certificate, FiberCertificate, FiberTarget};
use dualcon::lie::killing_signature;
use dualcon::scalars::{rational, GaussianRational, Rational};
use dualcon::so_catalog::{
    abelian, alternate_complement, catalog_params, dual_iso_via_jhalf, exponent_catalog, heisenberg, iso, motion,
    so_plus_abelian,
};
use dualcon::symmetric::{commutation_report, double_dual_check, dual_form};
use dualcon::{build_so, check_isomorphism, fingerprint, LieAlgebra, SOParams, SoPair, Vector};

type Outcome = Result<String, String>;

fn pairs() -> Vec<SoPair> {
    catalog_params(5).into_iter().map(SoPair::new).collect()
}

fn so_signatures() -> Vec<(usize, usize)> {
    (2..=5).flat_map(|n| (0..=n).map(move |p| (p, n - p))).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_valid(label: &str, g: &LieAlgebra) -> Result<(), String> {
    let r = g.validate();
    ensure(r.is_pass(), || format!("{label}: {r}"))
}

fn ac1() -> Outcome {
    let mut count = 0;
    let mut algebras: Vec<(String, LieAlgebra)> = so_signatures()
        .into_iter()
        .map(|(p, q)| (format!("so({p},{q})"), build_so(p, q).unwrap()))
        .collect();
    for n in 2..=5 {
        algebras.push((format!("iso({n})"), iso(n)));
        algebras.push((format!("abelian({n})"), abelian(n)));
        algebras.push((format!("so({n})+R^{n}"), so_plus_abelian(n, n)));
    }
    for n in [3, 5, 7] {
        algebras.push((format!("heisenberg({n})"), heisenberg(n).unwrap()));
    }
    for params in catalog_params(5) {
        algebras.push((format!("motion({params})"), motion(params.p, params.d, params.q)));
    }
    for (label, g) in &algebras {
        check_valid(label, g)?;
        count += 1;
    }
    let alphas = [rational(-4, 1), rational(-1, 1), rational(-1, 2), rational(0, 1), rational(1, 2), rational(1, 1), rational(4, 1)];
    for sp in pairs() {
        let label = sp.params.to_string();
        check_valid(&format!("contraction {label}"), &iw_contract(sp.pair.decomposition()))?;
        check_valid(&format!("dual {label}"), &dual_form(&sp.pair).unwrap().0)?;
        let fam = contraction_family(&sp.pair);
        for a in &alphas {
            check_valid(&format!("fiber {label} at {a}"), &fam.fiber(a))?;
        }
        count += 2 + alphas.len();
    }
    Ok(format!("{count} tables"))
}

fn ac2() -> Outcome {
    let betas = [rational(1, 1), rational(2, 1), rational(1, 2)];
    let non_square = [rational(2, 1), rational(1, 3), rational(-2, 1), rational(-1, 3)];
    for (p, d, q) in [(2, 1, 0), (1, 1, 1), (2, 1, 1), (2, 2, 0), (3, 1, 1)] {
        let sp = SoPair::new(SOParams::new(p, d, q).unwrap());
        let fam = contraction_family(&sp.pair);
        ensure(fam.fiber(&Rational::zero()) == iw_contract(sp.pair.decomposition()), || {
            format!("({p},{d},{q}): fiber(0) differs from the contraction")
        })?;
        for b in &betas {
            for (alpha, target) in [(b * b, FiberTarget::Original), (-(b * b), FiberTarget::Dual)] {
                let cert = fiber_isomorphism_certificate(&sp.pair, &fam, &alpha).unwrap();
                ensure(matches!(&cert, FiberCertificate::Verified { target: t, .. } if *t == target), || {
                    format!("({p},{d},{q}) at {alpha}: {cert:?}")
                })?;
            }
        }
        let plus = fingerprint(&sp.pair.adapted());
        let minus = fingerprint(&dual_form(&sp.pair).unwrap().0);
        for a in &non_square {
            let want = if a > &Rational::zero() { &plus } else { &minus };
            ensure(fingerprint(&fam.fiber(a)) == *want, || format!("({p},{d},{q}) at {a}: fingerprint on wrong side"))?;
        }
    }
    Ok("5 pairs, 6 certificates and 4 fingerprints each".into())
}

fn ac3() -> Outcome {
    let all = pairs();
    for sp in &all {
        let label = sp.params;
        let r = commutation_report(&sp.pair).unwrap();
        ensure(r.all_pass(), || format!("{label}: {r:?}"))?;
        ensure(double_dual_check(&sp.pair).unwrap(), || format!("{label}: double dual differs"))?;
        let (_, dual_pair) = dual_form(&sp.pair).unwrap();
        ensure(dual_pair.dims() == sp.pair.dims(), || format!("{label}: dual eigenspace dims {:?}", dual_pair.dims()))?;
    }
    Ok(format!("{} pairs", all.len()))
}

fn ac4() -> Outcome {
    let all = catalog_params(5);
    for params in &all {
        let c = dual_iso_via_jhalf(*params).unwrap();
        ensure(c.images_in_target && c.verified, || format!("{params}: certificate failed"))?;
    }
    Ok(format!("{} certificates", all.len()))
}

fn ac5() -> Outcome {
    let g = build_so(4, 0).unwrap();
    let v = |xs: &[i64]| Vector::from_ints(xs);
    // Basis order L12 L13 L14 L23 L24 L34.
    let diag = Decomposition::from_indices(g.clone(), &[0, 1, 3]).map_err(|e| e.to_string())?;
    let k1 = vec![v(&[1, 0, 0, 0, 0, 1]), v(&[0, 1, 0, 0, -1, 0]), v(&[0, 0, 1, 1, 0, 0])];
    let k2 = vec![v(&[1, 0, 0, 0, 0, -1]), v(&[0, 1, 0, 0, 1, 0]), v(&[0, 0, 1, -1, 0, 0])];
    ensure(g.is_ideal(&k1) && g.is_ideal(&k2), || "self-dual halves are not ideals".into())?;
    let ideal = Decomposition::new(g.clone(), k1, k2).map_err(|e| e.to_string())?;
    let fp_iso = fingerprint(&iso(3));
    let fp_sum = fingerprint(&so_plus_abelian(3, 3));
    ensure(fp_iso != fp_sum, || "references are indistinguishable".into())?;
    let a = fingerprint(&iw_contract(&diag));
    let b = fingerprint(&iw_contract(&ideal));
    ensure(a == fp_iso && a != fp_sum, || format!("diagonal so(3): {a:?}"))?;
    ensure(b == fp_sum && b != fp_iso, || format!("ideal so(3): {b:?}"))?;
    Ok("diagonal -> iso(3), ideal -> so(3)+R^3".into())
}

fn ac6() -> Outcome {
    let all = pairs();
    for sp in &all {
        let d1 = sp.pair.decomposition();
        let d2 = alternate_complement(d1);
        ensure(d1.p_basis() != d2.p_basis() || d1.p_basis().is_empty(), || format!("{}: complements coincide", sp.params))?;
        ensure(complements_agree(d1, &d2).unwrap(), || format!("{}: complements disagree", sp.params))?;
    }
    Ok(format!("{} pairs", all.len()))
}

fn pow(eps: &Rational, e: i64) -> Rational {
    let mut r = Rational::one();
    for _ in 0..e.unsigned_abs() {
        r = if e > 0 { r * eps } else { r / eps };
    }
    r
}

fn ac7() -> Outcome {
    let epsilons = [rational(1, 2), rational(1, 4), rational(1, 8)];
    let mut count = 0;
    for sp in pairs() {
        let g = sp.pair.algebra();
        for e in exponent_catalog(&sp.pair) {
            let n = &e.0;
            for eps in &epsilons {
                let t = g.transport_bracket(&e.scaling(eps)).unwrap();
                for i in 0..g.dim() {
                    for j in i + 1..g.dim() {
                        for k in 0..g.dim() {
                            let c = g.structure_constants().get(i, j, k);
                            let want = &c * &GaussianRational::from_rational(pow(eps, n[i] + n[j] - n[k]));
                            let got = t.structure_constants().get(i, j, k);
                            ensure(got == want, || {
                                format!("{} {:?} eps {eps}: ({i},{j},{k}) {got} != {want}", sp.params, n)
                            })?;
                        }
                    }
                }
            }
            let sign_test = g.structure_constants().iter().all(|(&(i, j, k), _)| n[i] + n[j] - n[k] >= 0);
            let limit = generalized_iw_contract(g, &e).unwrap();
            ensure(matches!(limit, ContractionLimit::Exists(_)) == sign_test, || {
                format!("{} {:?}: verdict disagrees with sign test", sp.params, n)
            })?;
            if let ContractionLimit::Exists(h) = &limit {
                check_valid(&format!("{} {:?} limit", sp.params, n), h)?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} assignments x 3 epsilons"))
}

fn ac8() -> Outcome {
    let all = pairs();
    for sp in &all {
        for a in [-1, 0, 1, 4] {
            let r = sp.realization_check(&rational(a, 1)).unwrap();
            ensure(r.is_pass(), || format!("{} at {a}: block matrices and z-rule disagree", sp.params))?;
        }
    }
    Ok(format!("{} pairs x 4 values", all.len()))
}

/// Killing signature versus `(pq, p(p−1)/2 + q(q−1)/2)`.
///
/// For `p + q = 2` the algebra is one-dimensional and abelian, so its
/// Killing form vanishes and the signature is `(0, 0)`; the formula holds
/// only for `p + q ≥ 3`. The criterion is reported as failing there.
fn ac9() -> (Outcome, Vec<(usize, usize)>) {
    let mut failures = Vec::new();
    let mut detail = Vec::new();
    for (p, q) in so_signatures() {
        let got = killing_signature(&build_so(p, q).unwrap()).unwrap();
        let want = (p * q, p * (p.saturating_sub(1)) / 2 + q * (q.saturating_sub(1)) / 2);
        if got != want {
            failures.push((p, q));
            detail.push(format!("so({p},{q}) gives {got:?}, formula {want:?}"));
        }
    }
    let outcome = if failures.is_empty() {
        Ok(format!("{} signatures", so_signatures().len()))
    } else {
        Err(detail.join("; "))
    };
    (outcome, failures)
}

fn ac10() -> Outcome {
    let all = pairs();
    for sp in &all {
        let g = sp.pair.algebra();
        let k = sp.pair.k_basis();
        let id = dualcon::Matrix::<GaussianRational>::identity(g.dim());
        let report = check_equivalence_witness(g, k, k, &id).unwrap();
        let dualcon::contraction::WitnessReport::Pass { nu_tilde, source, target } = report else {
            return Err(format!("{}: identity witness rejected: {report:?}", sp.params));
        };
        check_valid("source", &source)?;
        check_valid("target", &target)?;
        ensure(check_isomorphism(&source, &target, &nu_tilde).is_verified(), || format!("{}: not an isomorphism", sp.params))?;
        ensure(target.transport_bracket(&nu_tilde).unwrap().same_table(&source), || {
            format!("{}: transport mismatch", sp.params)
        })?;
    }
    Ok(format!("{} pairs", all.len()))
}

/// Prints the criterion line; returns 1 if the outcome was not the expected one.
fn report(name: &str, outcome: &Outcome, started: Instant, expected_fail: bool) -> usize {
    let secs = started.elapsed().as_secs_f64();
    match outcome {
        Ok(msg) => println!("PASS  {name}: {msg} [{secs:.2}s]"),
        Err(msg) => println!("FAIL  {name}: {msg} [{secs:.2}s]"),
    }
    usize::from(outcome.is_err() != expected_fail)
}

/// `so(1,1)`, `so(2,0)` and `so(0,2)` are abelian.
const AC9_EXPECTED_FAILURES: [(usize, usize); 3] = [(0, 2), (1, 1), (2, 0)];

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("AC1 axioms on catalog, contractions, duals, fibers", ac1),
        ("AC2 fiber trichotomy with certificates", ac2),
        ("AC3 sigma, sigma*, theta commute; double dual; dual dims", ac3),
        ("AC4 so(p+d,q)* to so(p,d+q) via J^1/2", ac4),
        ("AC5 so(4): diagonal vs ideal so(3)", ac5),
        ("AC6 complement independence", ac6),
        ("AC7 exponent law and limit verdicts", ac7),
        ("AC8 block-matrix realization vs z-rule", ac8),
        ("AC10 witness checker and induced map", ac10),
    ];
    let mut unexpected = 0;
    for (name, f) in &criteria[..8] {
        let t = Instant::now();
        unexpected += report(name, &f(), t, false);
    }
    let t = Instant::now();
    let (ac9_outcome, failures) = ac9();
    let ac9_as_analysed = failures == AC9_EXPECTED_FAILURES;
    unexpected += report("AC9 Killing signatures of so(p,q), p+q<=5", &ac9_outcome, t, true);
    if !ac9_as_analysed {
        println!("      AC9 failure set {failures:?} differs from the analysed set {AC9_EXPECTED_FAILURES:?}");
        unexpected += 1;
    }
    let (name, f) = &criteria[8];
    let t = Instant::now();
    unexpected += report(name, &f(), t, false);
    if unexpected == 0 {
        println!("acceptance: all criteria behave as recorded (AC9 fails only on the abelian p+q=2 cases)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected result(s)");
        ExitCode::FAILURE
    }
}
