//! The acceptance suite, shared by `skein selftest` and the `acceptance`
//! test target. Criteria with a wall-clock budget fail when they exceed it.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein_core::arrowdiag::{framing_weight, NamedGenerator};
use skein_core::bracket::corpus::{random_diagram, standard_corpus};
use skein_core::bracket::{
    add_kink, bracket_recursive, bracket_statesum, r2_sites, r3_sites, reidemeister2, reidemeister3,
    KinkSign, PlanarDiagram,
};
use skein_core::chebyshev::{chebyshev_s, to_chebyshev, to_monomial};
use skein_core::ideals::PrincipalityVerdict;
use skein_core::modpres::{
    manifold_catalog, marche_type_check, normal_form, normal_form_ordered, rank_over_qa, relation,
    split_obstruction, TypeCheck,
};
use skein_core::{Basis, LaurentPoly, TPoly};

use crate::certificate::{obstruction_certificate, to_json, verify_json, Certificate};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {} {}: {} ({:.3} s",
            self.id,
            self.title,
            verdict,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(b) = self.budget {
            write!(f, ", budget {} s", b.as_secs_f64())?;
        }
        write!(f, ") {}", self.detail)
    }
}

/// Collects failed checks; the first few are kept for the report.
#[derive(Default)]
struct Checks {
    total: usize,
    failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn summary(&self) -> (bool, String) {
        if self.failures.is_empty() {
            (true, format!("{} checks", self.total))
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            (
                false,
                format!(
                    "{} of {} checks failed: {}",
                    self.failures.len(),
                    self.total,
                    shown.join("; ")
                ),
            )
        }
    }
}

fn timed(
    id: u8,
    title: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce(&mut Checks),
) -> CriterionResult {
    let start = Instant::now();
    let mut checks = Checks::default();
    body(&mut checks);
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = checks.summary();
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push_str("; over budget");
        }
    }
    CriterionResult {
        id,
        title,
        passed,
        detail,
        elapsed,
        budget,
    }
}

fn p(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let n = rng.gen_range(0..=3);
    LaurentPoly::from_terms((0..n).map(|_| (rng.gen_range(-8i64..=8), rng.gen_range(-9i64..=9))))
}

fn random_tpoly(rng: &mut ChaCha8Rng, max_degree: u32, basis: Basis) -> TPoly {
    let n = rng.gen_range(0..8);
    TPoly::from_coeffs(
        basis,
        (0..n).map(|_| (rng.gen_range(0..=max_degree), random_laurent(rng))),
    )
}

pub fn criterion_rank() -> CriterionResult {
    timed(1, "rank over Q(A)", Some(Duration::from_secs(1)), |c| {
        let report = rank_over_qa(30);
        c.check(report.rank() == 4, || format!("rank {}", report.rank()));
        c.check(report.basis == [0, 1], || format!("basis {:?}", report.basis));
        c.check(report.verified(), || {
            "per-n rows do not all reduce into span{S_0, S_1}".into()
        });
        c.check(report.rows.len() == 29, || format!("{} rows", report.rows.len()));
    })
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Relations (i)/(ii) from raw arithmetic, using the closed form
/// `S_n = sum_k (-1)^k C(n-k, k) t^(n-2k)`.
pub fn written_relation(n: u32) -> TPoly {
    let ni = n as i64;
    let c = &LaurentPoly::a_pow(ni + 1) + &LaurentPoly::a_pow(-(ni + 1));
    let mut coeffs: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
    for k in 0..=n / 2 {
        let b = binomial((n - k) as u64, k as u64) * if k % 2 == 1 { -1 } else { 1 };
        coeffs.insert(n - 2 * k, c.scale(&b.into()));
    }
    let mut sum = LaurentPoly::zero();
    if n % 2 == 0 {
        for k in 1..=ni / 2 {
            sum += &LaurentPoly::a_pow(ni + 2 - 4 * k);
        }
        sum = &sum * &p(&[(1, 1), (-1, 1)]);
    } else {
        for k in 1..=(ni - 1) / 2 {
            sum += &LaurentPoly::a_pow(ni + 1 - 4 * k);
        }
    }
    let low = coeffs.entry(n % 2).or_insert_with(LaurentPoly::zero);
    *low -= &c;
    *low -= &sum.scale(&2.into());
    TPoly::from_coeffs(Basis::Monomial, coeffs)
}

pub fn criterion_relations() -> CriterionResult {
    timed(2, "relation fidelity", Some(Duration::from_secs(5)), |c| {
        for n in 2..=40 {
            let r = relation(n).expect("n >= 2");
            c.check(to_monomial(&r.expression) == written_relation(n), || {
                format!("n = {n}")
            });
        }
    })
}

pub fn criterion_torsion() -> CriterionResult {
    timed(3, "torsion witness at n = 2", None, |c| {
        let element = TPoly::from_coeffs(
            Basis::Chebyshev,
            [
                (2, p(&[(2, 1), (0, -1), (-2, 1)])),
                (0, p(&[(2, -1), (0, -1), (-2, -1)])),
            ],
        );
        let ann = p(&[(1, 1), (-1, 1)]);
        c.check(!normal_form(&element).is_zero(), || {
            "element reduces to zero".into()
        });
        c.check(normal_form(&element.scale(&ann)).is_zero(), || {
            "A + A^-1 does not kill the element".into()
        });
        let tc = marche_type_check(&ann);
        c.check(matches!(tc, Ok(TypeCheck::OfType { k: 2, .. })), || {
            format!("type check gave {tc:?}")
        });
        match skein_core::modpres::torsion_witness(2) {
            Ok(Some(w)) => c.check(w.element == element && w.annihilator == ann, || {
                "library witness differs".into()
            }),
            other => c.check(false, || format!("torsion_witness(2) gave {other:?}")),
        }
    })
}

pub fn criterion_obstruction() -> CriterionResult {
    timed(4, "non-splitness evidence", Some(Duration::from_secs(1)), |c| {
        for n in [2, 3] {
            let ob = split_obstruction(n).expect("n >= 2");
            match &ob.verdict {
                PrincipalityVerdict::NonPrincipal { gcd, certificate } => {
                    c.check(gcd.gcd.is_unit(), || format!("n = {n}: gcd not a unit"));
                    c.check(certificate.prime == 2, || {
                        format!("n = {n}: prime {}", certificate.prime)
                    });
                }
                v => c.check(false, || format!("n = {n}: verdict {}", v.status())),
            }
            c.check(ob.verify(), || format!("n = {n}: witnesses do not re-verify"));
            let cert = obstruction_certificate(n).map(Certificate::Obstruction);
            let ok = cert.is_ok_and(|cert| verify_json(&to_json(&cert)).is_ok());
            c.check(ok, || format!("n = {n}: JSON certificate does not re-verify"));
        }
    })
}

fn bracket_checks(c: &mut Checks, name: &str, d: &PlanarDiagram) {
    let v = bracket_statesum(d);
    c.check(bracket_recursive(d) == v, || format!("{name}: evaluators differ"));
    for (a, b) in r2_sites(d).into_iter().take(6) {
        for parallel in [true, false] {
            if let Ok(e) = reidemeister2(d, a, b, parallel) {
                c.check(bracket_statesum(&e) == v, || {
                    format!("{name}: R2 changed the bracket")
                });
            }
        }
    }
    for dart in r3_sites(d).into_iter().take(6) {
        if let Ok(e) = reidemeister3(d, dart) {
            c.check(bracket_statesum(&e) == v, || {
                format!("{name}: R3 changed the bracket")
            });
        }
    }
}

pub fn criterion_bracket() -> CriterionResult {
    timed(
        5,
        "bracket oracle equivalence",
        Some(Duration::from_secs(30)),
        |c| {
            let neg = LaurentPoly::monomial(-1, -3);
            for (name, d) in standard_corpus() {
                c.check(d.crossing_count() <= 8, || format!("{name}: too many crossings"));
                bracket_checks(c, &name, &d);
                if let Ok(k) = add_kink(&d, KinkSign::Negative) {
                    c.check(bracket_statesum(&k) == &neg * &bracket_statesum(&d), || {
                        format!("{name}: kink factor")
                    });
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
            for i in 0..200 {
                let d = random_diagram(|n| rng.gen_range(0..n), 8);
                c.check(d.validate().is_ok(), || format!("random diagram {i} invalid"));
                bracket_checks(c, &format!("random diagram {i}"), &d);
            }
            let (x, wx) = framing_weight(&NamedGenerator::X.diagram());
            let (tx, wt) = framing_weight(&NamedGenerator::T.diagram());
            c.check(x == tx && wx.is_one() && wt == neg, || {
                format!("t weight {wt}, expected -A^-3")
            });
        },
    )
}

pub fn criterion_chebyshev() -> CriterionResult {
    timed(6, "Chebyshev suite", None, |c| {
        let t = TPoly::t();
        for n in 0..=64 {
            let s = chebyshev_s(n);
            c.check(s.degree() == Some(n) && s.coeff(n).is_one(), || {
                format!("S_{n} not monic")
            });
            c.check(
                s.eval_t(&LaurentPoly::constant(2)) == LaurentPoly::constant(n as i64 + 1),
                || format!("S_{n}(2)"),
            );
            if n >= 2 {
                let rec = t
                    .mul(&chebyshev_s(n - 1))
                    .and_then(|x| x.sub(&chebyshev_s(n - 2)));
                c.check(rec.as_ref() == Ok(&s), || format!("recursion at n = {n}"));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for i in 0..200 {
            let q = random_tpoly(&mut rng, 40, Basis::Monomial);
            c.check(to_monomial(&to_chebyshev(&q)) == q, || format!("round trip {i}"));
        }
    })
}

pub fn criterion_normal_form() -> CriterionResult {
    timed(7, "normal-form properties", None, |c| {
        for n in 2..=40 {
            let r = relation(n).expect("n >= 2");
            c.check(normal_form(&r.expression).is_zero(), || format!("nf(r_{n}) != 0"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..500 {
            let x = random_tpoly(&mut rng, 30, Basis::Chebyshev);
            let y = random_tpoly(&mut rng, 30, Basis::Monomial).in_basis(Basis::Chebyshev);
            let (a, b) = (random_laurent(&mut rng), random_laurent(&mut rng));
            let (nx, ny) = (normal_form(&x), normal_form(&y));
            c.check(normal_form(&nx.lift()) == nx && nx.is_reduced(), || {
                format!("idempotence {i}")
            });
            let comb = x.scale(&a).add(&y.scale(&b)).expect("same basis");
            let lifted = nx.lift().scale(&a).add(&ny.lift().scale(&b)).expect("same basis");
            c.check(normal_form(&comb) == normal_form(&lifted), || {
                format!("linearity {i}")
            });
            let mut order: Vec<u32> = (2..=30).collect();
            for j in (1..order.len()).rev() {
                order.swap(j, rng.gen_range(0..=j));
            }
            c.check(normal_form_ordered(&x, &order) == nx, || {
                format!("confluence {i}")
            });
        }
    })
}

pub fn criterion_catalog() -> CriterionResult {
    timed(8, "positive control", None, |c| {
        let catalog = manifold_catalog();
        let Some(s1s2) = catalog.iter().find(|m| m.name == "S^1 x S^2") else {
            c.check(false, || "S^1 x S^2 missing from catalog".into());
            return;
        };
        c.check(s1s2.d == 1.into(), || format!("d = {}", s1s2.d));
        let ks: Vec<u32> = s1s2.torsion.iter().map(|r| r.k).collect();
        c.check(ks == (2..=12).collect::<Vec<_>>(), || format!("k values {ks:?}"));
        for k in 1..=12i64 {
            let lhs = &LaurentPoly::one() - &LaurentPoly::a_pow(2 * k);
            let rhs = &LaurentPoly::monomial(-1, k) * &(&LaurentPoly::a_pow(k) - &LaurentPoly::a_pow(-k));
            c.check(lhs == rhs, || format!("identity at k = {k}"));
        }
        for rec in &s1s2.torsion {
            c.check(rec.identity_checked, || format!("k = {}: identity flag", rec.k));
            let tc = marche_type_check(&rec.annihilator);
            c.check(
                matches!(tc, Ok(TypeCheck::OfType { k, .. }) if k == rec.k),
                || format!("k = {}: type check gave {tc:?}", rec.k),
            );
        }
    })
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_rank(),
        criterion_relations(),
        criterion_torsion(),
        criterion_obstruction(),
        criterion_bracket(),
        criterion_chebyshev(),
        criterion_normal_form(),
        criterion_catalog(),
    ]
}
