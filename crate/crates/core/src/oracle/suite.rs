//! The end-to-end cross-check suite. Each check runs one group of
//! properties against the brute-force engines and reports pass/fail with a
//! short summary.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{bfs_distances, brute_force_d, catalog, catalog_up_to_rank, neighbors, relations, rewrite_distance, weyl_dim_formula};
use crate::chars::{highest_weight, irreducible_character, FormalCharacter};
use crate::dioph::{solve_60_equation, solve_d, solve_k_equation, DSolution};
use crate::embed::{maximal_equal_rank_subalgebras, restrict_character, same_formal_character, ambient_multiset};
use crate::equiv::{
    a_type_reduction, canonical_form, equal_rank_equivalent, invariant, is_reduction_preserved, verify_det_identity,
    EquivClassInvariant,
};
use crate::metric::{character_metric, length_sq_a, validate_cross_geometry, AngleClass, CharacterMetric};
use crate::rootsys::{RootSystem, SemisimpleAlgebra, SimpleType, Weight};
use crate::{q, Rational};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    /// Wall-clock budget, when the check has one.
    pub budget: Option<Duration>,
}

impl CheckOutcome {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_budget()
    }

    pub fn line(&self) -> String {
        let budget = match self.budget {
            Some(b) => format!(" (budget {:.0?})", b),
            None => String::new(),
        };
        format!(
            "[{}] {}. {}: {} in {:.2?}{}",
            if self.ok() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed,
            budget
        )
    }
}

fn run(id: usize, name: &'static str, budget: Option<Duration>, f: impl FnOnce() -> (bool, String)) -> CheckOutcome {
    let t = Instant::now();
    let (passed, detail) = f();
    CheckOutcome {
        id,
        name,
        passed,
        detail,
        elapsed: t.elapsed(),
        budget,
    }
}

fn alg(s: &str) -> SemisimpleAlgebra {
    SemisimpleAlgebra::new(s.split('x').map(|t| t.parse().expect("valid type")).collect()).expect("nonempty")
}

fn st(s: &str) -> SimpleType {
    s.parse().expect("valid type")
}

pub const EXPECTED_D: [(u64, u64, u64); 7] = [(1, 5, 2), (1, 7, 1), (1, 7, 5), (2, 5, 1), (2, 5, 3), (4, 4, 1), (4, 4, 2)];

pub fn check_diophantine() -> CheckOutcome {
    run(1, "Diophantine exactness", Some(Duration::from_secs(1)), || {
        let expected: BTreeSet<DSolution> = EXPECTED_D.iter().map(|&(m, l, k)| DSolution::new(m, l, k)).collect();
        let solved = solve_d();
        let brute = brute_force_d(1000);
        let ok = solved == expected && brute == expected && solved.iter().all(DSolution::verify);
        (ok, format!("{} solutions; brute force to 1000 finds {}", solved.len(), brute.len()))
    })
}

pub fn check_auxiliary() -> CheckOutcome {
    run(2, "Auxiliary equations", Some(Duration::from_secs(1)), || {
        let k = solve_k_equation();
        let sixty: Vec<u64> = solve_60_equation().keys().copied().collect();
        let ok = k == BTreeSet::from([(3, 1)]) && sixty == vec![8, 9];
        (ok, format!("k(n-k-1)=1 -> {k:?}; K^2-NK+2N=0 -> N in {sixty:?}"))
    })
}

pub const EQUIVALENCE_CHAINS: [(&str, &str); 7] = [
    ("A4xA4", "A8"),
    ("A8", "A2xA2xA2xA2"),
    ("A4xA4", "A2xA2xA2xA2"),
    ("A7", "A2xA5"),
    ("A1xA5", "A2xA2xA2"),
    ("A2", "A1xA1"),
    ("A3", "A1xA1xA1"),
];

pub fn check_equivalence_list() -> CheckOutcome {
    run(3, "Equivalence list", Some(Duration::from_secs(10)), || {
        let mut ok = true;
        let mut parts = Vec::new();
        for (a, b) in EQUIVALENCE_CHAINS {
            let (g, h) = (alg(a), alg(b));
            let eq = equal_rank_equivalent(&g, &h);
            let d = rewrite_distance(&g, &h, 6);
            ok &= eq && d.is_some();
            parts.push(format!("{a}~{b}:{}", d.map_or("none".into(), |d| d.to_string())));
        }
        (ok, format!("rewrite depths {}", parts.join(", ")))
    })
}

pub fn check_e8_flagship() -> CheckOutcome {
    run(4, "E8 flagship", Some(Duration::from_secs(30)), || {
        let e8 = st("E8");
        let adj = FormalCharacter::adjoint(&SemisimpleAlgebra::simple(e8));
        let embs = maximal_equal_rank_subalgebras(e8);
        let find = |s: &str| embs.iter().find(|e| e.sub() == &alg(s)).cloned();
        let (Some(e1), Some(e2)) = (find("A1xE7"), find("A4xA4")) else {
            return (false, "E8 embeddings missing".into());
        };
        let (Ok(r1), Ok(r2)) = (restrict_character(&adj, &e1), restrict_character(&adj, &e2)) else {
            return (false, "restriction failed".into());
        };
        let m1 = ambient_multiset(&r1, &e1).expect("same sub");
        let m2 = ambient_multiset(&r2, &e2).expect("same sub");
        let literal = m1 == m2 && &m1 == adj.weights();
        let same = same_formal_character(&r1, &e1, &r2, &e2).unwrap_or(false);
        let target = EquivClassInvariant {
            rank: 8,
            a_counts: BTreeMap::new(),
            a4_odd: false,
        };
        let (i1, i2) = (invariant(e1.sub()), invariant(e2.sub()));
        let contains_sub_adjoint = r2.contains(&FormalCharacter::adjoint(e2.sub()));
        let ok = literal
            && same
            && r1.dim() == 248
            && r2.dim() == 248
            && i1 == target
            && i2 == target
            && contains_sub_adjoint
            && r1.is_weyl_invariant()
            && r2.is_weyl_invariant();
        (
            ok,
            format!(
                "dims {}/{}, multisets equal: {literal}, same character: {same}, invariants {i1} / {i2}",
                r1.dim(),
                r2.dim()
            ),
        )
    })
}

pub fn check_metric_properties() -> CheckOutcome {
    run(5, "Metric properties", None, || {
        let mut ok = true;
        let mut types = 0;
        for t in SimpleType::all_up_to_rank(6) {
            let g = SemisimpleAlgebra::simple(t);
            match character_metric(&FormalCharacter::adjoint(&g)) {
                Ok(m) => {
                    ok &= m.is_weyl_invariant() && m.is_block_proportional();
                    ok &= m.form() * m.dual_form() == crate::linalg::Matrix::identity(t.rank());
                }
                Err(_) => ok = false,
            }
            types += 1;
        }
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut samples = 0;
        for n in 1..=10usize {
            let rs = RootSystem::get(SimpleType::a(n));
            for _ in 0..200 {
                let a: Vec<Rational> = (0..n).map(|_| q(rng.gen_range(-6..=6))).collect();
                let lhs = length_sq_a(&a, n).expect("length matches");
                let rhs = rs.gram().bilinear(&a, &a);
                ok &= lhs == rhs;
                samples += 1;
            }
        }
        (ok, format!("{types} simple types checked; {samples} A_n samples exact"))
    })
}

pub fn check_det_identity() -> CheckOutcome {
    run(6, "Determinant identity", None, || {
        let mut ok = true;
        let mut n = 0;
        let mut lines = Vec::new();
        for t in ["E6", "E7", "E8", "F4", "G2"] {
            let t = st(t);
            let g = SemisimpleAlgebra::simple(t);
            let metrics = [
                CharacterMetric::normalized(&g),
                character_metric(&FormalCharacter::adjoint(&g)).expect("adjoint is faithful"),
            ];
            for e in maximal_equal_rank_subalgebras(t) {
                for m in &metrics {
                    match verify_det_identity(&g, e.sub(), e.sub_simple_roots(), m) {
                        Ok(r) => {
                            ok &= r.holds && r.matches_invariants && r.lhs_square_class == r.rhs_square_class;
                        }
                        Err(_) => ok = false,
                    }
                }
                n += 1;
                lines.push(format!("{t}>{}", e.sub()));
            }
        }
        (ok, format!("{n} embeddings: {}", lines.join(" ")))
    })
}

pub fn check_reduction_soundness() -> CheckOutcome {
    run(7, "Reduction soundness", None, || {
        let rels = relations(8);
        let mut ok = true;
        let mut problems: Vec<String> = Vec::new();

        // Every relation joins equal invariants, and the invariant is
        // additive, so no rewrite path can join distinct invariants.
        for r in &rels {
            if invariant(&r.left) != invariant(&r.right) {
                ok = false;
                problems.push(format!("relation {r} changes the invariant"));
            }
        }

        let big = catalog(4, 8);
        let mut steps = 0usize;
        let mut edges = 0usize;
        let mut canon: HashMap<SemisimpleAlgebra, SemisimpleAlgebra> = HashMap::new();
        let mut canonical = |g: &SemisimpleAlgebra| canon.entry(g.clone()).or_insert_with(|| canonical_form(g)).clone();
        for g in &big {
            for s in a_type_reduction(g).1 {
                steps += 1;
                let preserved = s.before.rank() == s.after.rank()
                    && (1..=s.before.rank())
                        .filter(|&k| is_reduction_preserved(k))
                        .all(|k| s.before.count(SimpleType::a(k)) == s.after.count(SimpleType::a(k)));
                if !preserved {
                    ok = false;
                    problems.push(format!("step {s} breaks preservation"));
                }
            }
            let c = canonical(g);
            if canonical(&c) != c {
                ok = false;
                problems.push(format!("canonical form of {g} is not idempotent"));
            }
            let parts: Vec<EquivClassInvariant> = g
                .factors()
                .iter()
                .map(|&t| invariant(&SemisimpleAlgebra::simple(t)))
                .collect();
            let combined = parts[1..].iter().fold(parts[0].clone(), |acc, x| acc.combine(x));
            if combined != invariant(g) {
                ok = false;
                problems.push(format!("invariant of {g} is not additive"));
            }
            for x in neighbors(g, &rels) {
                edges += 1;
                if canonical(&x) != c {
                    ok = false;
                    problems.push(format!("{g} -> {x} changes the canonical form"));
                }
            }
        }

        // Explicit depth-6 search over the rank <= 8 catalog.
        let small = catalog_up_to_rank(8);
        let mut max_needed = 0usize;
        let mut pairs = 0usize;
        let mut beyond_6 = 0usize;
        let mut unconnected = 0usize;
        let mut classes: HashMap<EquivClassInvariant, Vec<SemisimpleAlgebra>> = HashMap::new();
        for g in &small {
            classes.entry(invariant(g)).or_default().push(g.clone());
        }
        for g in &small {
            let inv = invariant(g);
            let dist = bfs_distances(g, &rels, None);
            for (x, &d) in &dist {
                if invariant(x) != inv {
                    ok = false;
                    problems.push(format!("{g} reaches {x} with a different invariant"));
                } else if d <= 6 {
                    pairs += 1;
                }
            }
            for h in &classes[&inv] {
                match dist.get(h) {
                    Some(&d) => {
                        max_needed = max_needed.max(d);
                        if d > 6 {
                            beyond_6 += 1;
                        }
                    }
                    None => unconnected += 1,
                }
            }
        }
        problems.truncate(3);
        (
            ok,
            format!(
                "{} algebras, {steps} reduction steps, {edges} rewrite edges; rank<=8: {} algebras, {pairs} connected pairs within depth 6, max depth needed {max_needed}, equal-invariant pairs connected only beyond depth 6: {beyond_6}, not connected by table relations: {unconnected}{}",
                big.len(),
                small.len(),
                if problems.is_empty() { String::new() } else { format!("; {}", problems.join("; ")) }
            ),
        )
    })
}

/// Dominant Dynkin labels with coefficient sum at most `max_sum`.
pub fn dominant_labels(rank: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_sum, &mut vec![0; rank], &mut out);
    out
}

pub fn check_character_oracle() -> CheckOutcome {
    run(8, "Character oracle", None, || {
        let mut ok = true;
        let mut count = 0usize;
        let mut failures = Vec::new();
        for g in catalog_up_to_rank(4) {
            let layout = g.layout();
            for labels in dominant_labels(g.rank(), 4) {
                let hw = highest_weight(&layout, &labels).expect("labels fit");
                let (Ok(c), Ok(d)) = (irreducible_character(&g, &hw), weyl_dim_formula(&g, &hw)) else {
                    ok = false;
                    continue;
                };
                if c.dim() as u128 != d {
                    ok = false;
                    failures.push(format!("{g} {labels:?}: {} vs {d}", c.dim()));
                }
                count += 1;
            }
            let adj = FormalCharacter::adjoint(&g);
            ok &= adj.multiplicity(&Weight::zero(g.rank())) == g.rank() as u64;
            if g.is_simple() {
                let theta = layout.system(0).highest_root().clone();
                let irr = irreducible_character(&g, &theta).expect("dominant");
                ok &= irr == adj && irr.multiplicity(&Weight::zero(g.rank())) == g.rank() as u64;
            }
        }
        failures.truncate(3);
        (ok, format!("{count} highest weights agree with the dimension formula{}", if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }))
    })
}

pub fn check_geometry_table() -> CheckOutcome {
    run(9, "Geometry table", None, || {
        let e8 = st("E8");
        let g = SemisimpleAlgebra::simple(e8);
        let m = character_metric(&FormalCharacter::adjoint(&g)).expect("adjoint is faithful");
        let embs = maximal_equal_rank_subalgebras(e8);
        let find = |s: &str| embs.iter().find(|e| e.sub() == &alg(s)).cloned().expect("embedding present");
        let (e7a1, a4a4) = (find("A1xE7"), find("A4xA4"));
        let allowed: BTreeSet<AngleClass> = [
            AngleClass::Deg0,
            AngleClass::Deg30,
            AngleClass::Deg45,
            AngleClass::Deg60,
            AngleClass::Deg90,
            AngleClass::Deg120,
            AngleClass::Deg135,
            AngleClass::Deg150,
            AngleClass::Deg180,
        ]
        .into();
        let mut ok = true;
        let mut seen = BTreeSet::new();
        let mut violations = 0;
        for (gq, hq) in [(&a4a4, &e7a1), (&e7a1, &a4a4)] {
            let rep = validate_cross_geometry(&gq.sub_factor_roots(), &hq.sub_roots(), &m).expect("same space");
            violations += rep.violations.len();
            let angles = rep.angles_seen();
            ok &= rep.is_clean() && angles.is_subset(&allowed);
            seen.extend(angles);
        }

        // Negative control: nudge one root off the lattice of directions.
        let mut flagged = false;
        let u = e7a1.sub_roots()[0].clone();
        for k in 0..8 {
            let mut c = u.coords().to_vec();
            c[k] += q(1);
            let bad = Weight::new(c);
            if let Ok(rep) = validate_cross_geometry(&a4a4.sub_factor_roots(), &[bad], &m) {
                if rep.angles_seen().contains(&AngleClass::Other) && !rep.is_clean() {
                    flagged = true;
                    break;
                }
            }
        }
        ok &= flagged;
        let names: Vec<String> = seen.iter().map(ToString::to_string).collect();
        (ok, format!("angles seen {{{}}}, {violations} violations, perturbed root flagged: {flagged}", names.join(", ")))
    })
}

/// Every check in order.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        check_diophantine(),
        check_auxiliary(),
        check_equivalence_list(),
        check_e8_flagship(),
        check_metric_properties(),
        check_det_identity(),
        check_reduction_soundness(),
        check_character_oracle(),
        check_geometry_table(),
    ]
}
