//! The acceptance suite: one report per criterion, each with a pinned time limit.
//! Shared by the `acceptance` test target and `qwalled selftest`.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::centralizer::{build_uq_action, commutant_dim, Side};
use crate::diagram::{
    classical_relations, classical_rep_basis, classical_rep_element, enumerate_basis, normalize,
    random_diagram, statistics, worked_example, BeadDiagram, DiagramElement, DiagramModel,
};
use crate::error::Result;
use crate::quantum::{
    aq_relation_rank_all, aq_relation_span, certify_dimension, check_all_relations,
    classical_limit_check, enumerate_normal_monomials, generator_matrix, hecke_checks,
    hecke_clifford_commutant_dim, skein_checks, wta_relation_check, yang_baxter, QGen,
};
use crate::relations::{check_relation_set, CheckStatus, RelationCheck};
use crate::report::{Check, Report};
use crate::scalar::sumq_identity_check;
use crate::superlinalg::{rank_exact, RankMode};

/// A criterion: id, title, time limit, and the function producing its checks.
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit: Duration,
    pub run: fn(bool) -> Result<Vec<Check>>,
}

pub const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "basis counts",
        limit: Duration::from_secs(1),
        run: basis_counts,
    },
    Criterion {
        id: 2,
        title: "worked example",
        limit: Duration::from_secs(1),
        run: worked_example_checks,
    },
    Criterion {
        id: 3,
        title: "classical presentation and faithfulness",
        limit: Duration::from_secs(120),
        run: classical_presentation,
    },
    Criterion {
        id: 4,
        title: "quantum relation suite",
        limit: Duration::from_secs(300),
        run: quantum_relations_suite,
    },
    Criterion {
        id: 5,
        title: "Yang-Baxter and Hecke",
        limit: Duration::from_secs(30),
        run: yang_baxter_hecke,
    },
    Criterion {
        id: 6,
        title: "q-sum identity",
        limit: Duration::from_secs(1),
        run: sumq,
    },
    Criterion {
        id: 7,
        title: "dimension certification",
        limit: Duration::from_secs(300),
        run: dimension_certification,
    },
    Criterion {
        id: 8,
        title: "classical limit",
        limit: Duration::from_secs(120),
        run: classical_limit,
    },
    Criterion {
        id: 9,
        title: "centralizer",
        limit: Duration::from_secs(300),
        run: centralizer,
    },
    Criterion {
        id: 10,
        title: "Schur duality",
        limit: Duration::from_secs(300),
        run: schur_duality,
    },
    Criterion {
        id: 11,
        title: "property suites",
        limit: Duration::from_secs(300),
        run: properties,
    },
];

/// Runs one criterion; exceeding the time limit is a failure.
pub fn run_criterion(c: &Criterion, quick: bool) -> Report {
    let started = Instant::now();
    let mut items = match (c.run)(quick) {
        Ok(items) => items,
        Err(e) => vec![Check::eq("completed", "ok".to_string(), e.to_string())],
    };
    let elapsed = started.elapsed();
    items.push(Check::holds(
        format!("within {} s", c.limit.as_secs()),
        elapsed <= c.limit,
    ));
    Report::new(format!("{}. {}", c.id, c.title), items, started)
}

pub fn run_all(quick: bool) -> Vec<Report> {
    CRITERIA.iter().map(|c| run_criterion(c, quick)).collect()
}

fn shapes(quick: bool) -> Vec<(usize, usize)> {
    let mut v = vec![(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)];
    if !quick {
        v.push((2, 2));
    }
    v
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn relations_ok(id: String, checks: &[RelationCheck]) -> Vec<Check> {
    let failing: Vec<_> = checks
        .iter()
        .filter(|c| c.status == CheckStatus::Fails)
        .map(|c| c.id.as_str())
        .collect();
    let held = checks
        .iter()
        .filter(|c| c.status == CheckStatus::Holds)
        .count();
    vec![
        Check::info(format!("{id} relations verified"), held),
        Check::eq(
            format!("{id} failing relations"),
            String::new(),
            failing.join(", "),
        ),
    ]
}

fn basis_counts(quick: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (r, s) in shapes(quick) {
        let want = (1 << (r + s)) * factorial(r + s);
        out.push(Check::eq(
            format!("diagram basis ({r},{s})"),
            want,
            enumerate_basis(r, s).len(),
        ));
        out.push(Check::eq(
            format!("normal monomials ({r},{s})"),
            want,
            enumerate_normal_monomials(r, s).len(),
        ));
    }
    Ok(out)
}

fn worked_example_checks(_: bool) -> Result<Vec<Check>> {
    let d = worked_example();
    let st = statistics(&d).as_tuple();
    let (_, nd) = normalize(&d);
    Ok(vec![
        Check::eq(
            "statistics",
            format!("{:?}", [0, 3, 1, 2, 2, 2, 5, 1, 15, 16]),
            format!("{st:?}"),
        ),
        Check::eq(
            "normal form",
            "c2 e2,5 e4,6 s2 s1 s5 s6 c1 c4 c6".to_string(),
            nd.to_string(),
        ),
    ])
}

fn classical_presentation(quick: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (r, s) in shapes(quick) {
        let checks = check_relation_set(&DiagramModel { r, s }, &classical_relations(r, s))?;
        out.extend(relations_ok(format!("diagrams ({r},{s})"), &checks));
    }
    for (n, r, s, want) in [(2, 1, 1, 8), (3, 2, 1, 48)] {
        let reps = enumerate_basis(r, s)
            .iter()
            .map(|x| classical_rep_basis(x, n))
            .collect::<Result<Vec<_>>>()?;
        out.push(Check::eq(
            format!("representation rank ({n},{r},{s})"),
            want,
            rank_exact(&reps),
        ));
    }
    Ok(out)
}

fn quantum_relations_suite(quick: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut cases = vec![(2, 1, 1), (3, 2, 1), (3, 1, 2)];
    if !quick {
        // the smallest shape where the mixed relations are not vacuous
        cases.push((2, 2, 2));
    }
    for (n, r, s) in cases {
        out.extend(relations_ok(
            format!("({n},{r},{s})"),
            &check_all_relations(n, r, s)?,
        ));
    }
    Ok(out)
}

fn yang_baxter_hecke(_: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push(Check::holds(format!("Yang-Baxter n={n}"), yang_baxter(n)?));
        out.extend(hecke_checks(n));
    }
    Ok(out)
}

fn sumq(_: bool) -> Result<Vec<Check>> {
    let mut bad = Vec::new();
    let mut count = 0;
    for i in -5..=5i64 {
        for k in i + 1..=5 {
            if i == 0 || k == 0 {
                continue;
            }
            count += 1;
            if !sumq_identity_check(i, k)?.is_zero() {
                bad.push(format!("({i},{k})"));
            }
        }
    }
    Ok(vec![
        Check::info("pairs checked", count),
        Check::eq("nonzero residuals", String::new(), bad.join(" ")),
    ])
}

fn dimension_certification(_: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, r, s, mode) in [
        (2, 1, 1, RankMode::Exact),
        (3, 2, 1, RankMode::Probabilistic),
    ] {
        let c = certify_dimension(n, r, s, mode)?;
        out.push(Check::eq(
            format!("rank = count ({n},{r},{s})"),
            c.count,
            c.rank.rank,
        ));
        out.push(Check::holds(
            format!("certified ({n},{r},{s})"),
            c.certified,
        ));
        if !c.rank.points.is_empty() {
            out.push(Check::info("evaluation points", c.rank.points.join(", ")));
        }
    }
    Ok(out)
}

fn classical_limit(_: bool) -> Result<Vec<Check>> {
    let lim = classical_limit_check(3, 2, 1)?;
    let failing: Vec<_> = lim
        .checks
        .iter()
        .filter(|c| c.failed())
        .map(|c| c.id.clone())
        .collect();
    let mut out = vec![
        Check::info("generator checks", lim.checks.len()),
        Check::eq(
            "failing generator checks",
            String::new(),
            failing.join(", "),
        ),
    ];
    out.extend(relations_ok(
        "classical relations at q=1".into(),
        &lim.relations,
    ));
    out.push(Check::eq("rank at q=1 (3,2,1)", 48, lim.rank_at_one));
    Ok(out)
}

fn centralizer(_: bool) -> Result<Vec<Check>> {
    let uq = commutant_dim(2, 1, 1, Side::Uq, RankMode::Exact)?;
    let classical = commutant_dim(3, 2, 1, Side::Classical, RankMode::Exact)?;
    let mut out = vec![
        Check::eq("U_q commutant (2,1,1)", 8, uq.dim),
        Check::eq("q(n) commutant (3,2,1)", 48, classical.dim),
    ];
    for (n, r, s) in [(2, 1, 1), (3, 2, 1)] {
        let blocks = build_uq_action(n, r, s)?;
        let mut ok = true;
        for g in QGen::all(r, s) {
            let rg = generator_matrix(g, n, r, s)?;
            for b in &blocks {
                ok &= b.matrix.supercommutator(&rg)?.is_zero();
            }
        }
        out.push(Check::holds(
            format!("u_ij blocks supercommute with generators ({n},{r},{s})"),
            ok,
        ));
    }
    Ok(out)
}

fn schur_duality(_: bool) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=2 {
        let span = aq_relation_span(n, 2)?;
        out.push(Check::eq(
            format!("A_q(n,2) vs HC_2 commutant n={n}"),
            hecke_clifford_commutant_dim(n)?,
            span.quotient_dim,
        ));
        out.push(Check::eq(
            format!("span reduction n={n}"),
            aq_relation_rank_all(n),
            span.relation_rank,
        ));
        let w = wta_relation_check(n)?;
        out.push(Check::eq(
            format!("walled relations vs commutant n={n}"),
            w.commutant_codim,
            w.relation_rank,
        ));
    }
    Ok(out)
}

const RANDOM_CASES: usize = 200;

fn properties(quick: bool) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(crate::superlinalg::seed_from_env());
    let mut out = Vec::new();
    let shapes = shapes(quick);
    let (mut assoc, mut idem, mut slide) = (0, 0, 0);
    for &(r, s) in &shapes {
        for _ in 0..RANDOM_CASES {
            let d: Vec<_> = (0..3).map(|_| random_diagram(r, s, 4, &mut rng)).collect();
            let x: Vec<_> = d.iter().map(DiagramElement::from_diagram).collect();
            let left = x[0].multiply(&x[1])?.multiply(&x[2])?;
            let right = x[0].multiply(&x[1].multiply(&x[2])?)?;
            assoc += usize::from(left != right);
            let (_, nd) = normalize(&d[0]);
            let dt = nd.to_bead_diagram();
            idem += usize::from(statistics(&dt).gamma != 0 || normalize(&dt) != (1, nd.clone()));
            slide += usize::from(normalize(&slid(&d[0])?) != normalize(&d[0]));
        }
    }
    out.push(Check::info("random cases per shape", RANDOM_CASES));
    out.push(Check::eq("associativity failures", 0, assoc));
    out.push(Check::eq("idempotence failures", 0, idem));
    out.push(Check::eq("slide failures", 0, slide));
    // ρ(y)ρ(x) = ρ(xy) over all basis pairs
    let (n, r, s) = if quick { (2, 1, 1) } else { (3, 2, 1) };
    let basis = enumerate_basis(r, s);
    let reps = basis
        .iter()
        .map(|x| classical_rep_basis(x, n))
        .collect::<Result<Vec<_>>>()?;
    let mut hom = 0;
    let mut pairs = 0;
    for (x, rx) in basis.iter().zip(&reps) {
        for (y, ry) in basis.iter().zip(&reps) {
            let xy =
                DiagramElement::basis(x.clone()).multiply(&DiagramElement::basis(y.clone()))?;
            hom += usize::from(ry.mul(rx) != classical_rep_element(&xy, n)?);
            pairs += 1;
        }
    }
    out.push(Check::info(format!("basis pairs ({n},{r},{s})"), pairs));
    out.push(Check::eq("homomorphism failures", 0, hom));
    for (n, r, s) in [(2, 1, 1), (2, 2, 2)] {
        let sk = skein_checks(n, r, s)?;
        out.push(Check::eq(
            format!("skein failures ({n},{r},{s})"),
            0,
            sk.iter().filter(|c| c.failed()).count(),
        ));
    }
    Ok(out)
}

/// The same diagram with every strand's beads moved to its other endpoint.
fn slid(d: &BeadDiagram) -> Result<BeadDiagram> {
    let strands = d.strands();
    let edges: Vec<_> = strands.iter().map(|(u, v, _)| (*u, *v)).collect();
    let beads: Vec<_> = strands
        .into_iter()
        .filter(|(_, _, l)| !l.is_empty())
        .map(|(_, v, mut l)| {
            l.reverse();
            (v, l)
        })
        .collect();
    BeadDiagram::from_strands(d.r(), d.s(), &edges, &beads)
}
