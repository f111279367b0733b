use std::fmt::Write as _;
use std::path::Path;

use degentropy_core::graph::construct_extremal_nm;
use degentropy_core::numerics::{entropy, entropy_from_potential, potential};
use degentropy_core::search::{
    cross_validate, discrepancy, min_entropy_nm_oracle, Discrepancy, ExtremalResult, SizeSearch,
    STATED_STAR_EXCEPTIONS,
};
use degentropy_core::verify::{
    run_claim_suite, Bound, ClaimReport, ClaimStatus, Evidence, Expectation, SuiteGrid,
};
use degentropy_core::{DegreeSequence, LabeledGraph, LogCombination};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::edgelist::{self, ParseError};
use crate::output::{decimal, degrees_json, edges_inline, edges_json, number, Outcome, Output};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] degentropy_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("failed to render output: {0}")]
    Render(String),
}

impl CliError {
    /// 2 for usage and domain errors, 3 for unreadable or malformed input
    /// and output failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => 2,
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Render(_) => 3,
        }
    }
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn exact_and_decimal(v: &LogCombination, digits: usize) -> (String, String) {
    (v.to_string(), decimal(v.approx(), digits))
}

pub fn read_graph(path: &Path) -> Result<LabeledGraph, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    edgelist::parse(&text).map_err(|source| CliError::Parse {
        path: shown,
        source,
    })
}

pub fn cmd_entropy(graph: &LabeledGraph, digits: usize) -> Result<Output, CliError> {
    let (n, m) = (graph.order(), graph.size());
    if m == 0 {
        return Err(degentropy_core::Error::NoEdges.into());
    }
    let seq = graph.degree_sequence();
    let value = entropy(&seq)?;
    let mut potentials = Vec::new();
    let mut text = format!(
        "n = {n}\nm = {m}\ndegree sequence = {seq}\nI(G) = {}\n",
        decimal(value, digits)
    );
    let mut row = vec![
        n.to_string(),
        m.to_string(),
        seq.to_string(),
        decimal(value, digits),
    ];
    for c in 0..=2u32 {
        let h = potential(&seq, c, n)?;
        let (exact, dec) = exact_and_decimal(&h, digits);
        let _ = writeln!(text, "h_{c}(G) = {dec} = {exact}");
        potentials.push(json!({"c": c, "value_decimal": dec, "value_exact": exact}));
        row.push(dec);
        row.push(exact);
    }
    Ok(Output {
        command: "entropy",
        params: params(&[]),
        results: vec![json!({
            "n": n,
            "m": m,
            "degree_sequence": degrees_json(&seq),
            "entropy": decimal(value, digits),
            "potentials": potentials,
        })],
        text,
        csv_header: vec![
            "n",
            "m",
            "degree_sequence",
            "entropy",
            "h0_decimal",
            "h0_exact",
            "h1_decimal",
            "h1_exact",
            "h2_decimal",
            "h2_exact",
        ],
        csv_rows: vec![row],
        outcome: Outcome::Success,
    })
}

fn discrepancy_json(d: &Discrepancy) -> Value {
    json!({
        "reference": d.stated.as_ref().map(|s| s.iter().map(degrees_json).collect::<Vec<_>>()),
        "found": d.found.iter().map(degrees_json).collect::<Vec<_>>(),
    })
}

fn discrepancy_text(d: &Discrepancy) -> String {
    let list = |s: &[DegreeSequence]| {
        s.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let exceptions = STATED_STAR_EXCEPTIONS.map(|m| m.to_string()).join(", ");
    let predicted = match &d.stated {
        None => format!("names no optimum for m = {}", d.size),
        Some(s) => format!("predicts {}", list(s)),
    };
    format!(
        "DISCREPANCY: the reference characterisation for c = {} (star excluded at m in {{{exceptions}}}) {predicted}; exhaustive search found {}\n",
        d.shift,
        list(&d.found)
    )
}

pub fn cmd_search(
    m: u32,
    c: u32,
    pad: Option<usize>,
    prune: bool,
    digits: usize,
) -> Result<Output, CliError> {
    let mut opts = SizeSearch::new(m, c).prune(prune);
    if let Some(p) = pad {
        opts = opts.padding(p);
    }
    let result = opts.run()?;
    let (exact, dec) = exact_and_decimal(&result.objective, digits);
    let tie = result.is_tie();
    let flagged = discrepancy(&result);

    let mut text = format!(
        "search m={m} c={c} padding={} pruned={prune} searched={}\nmax h_{c} = {dec} = {exact}\n",
        result.params.padding, result.searched
    );
    if tie {
        let _ = writeln!(
            text,
            "TIE: {} optima with equal exact value",
            result.optima.len()
        );
    }
    let mut optima = Vec::new();
    let mut rows = Vec::new();
    for (i, (seq, w)) in result.optima.iter().zip(&result.witnesses).enumerate() {
        let rank = i + 1;
        let _ = writeln!(
            text,
            "  #{rank} {seq}{}  edges: {}",
            if tie { "  TIE" } else { "" },
            edges_inline(w)
        );
        optima.push(json!({
            "rank": rank,
            "degree_sequence": degrees_json(seq),
            "witness": edges_json(w),
        }));
        rows.push(vec![
            m.to_string(),
            c.to_string(),
            rank.to_string(),
            seq.to_string(),
            dec.clone(),
            exact.clone(),
            tie.to_string(),
        ]);
    }
    if let Some(d) = &flagged {
        text.push_str(&discrepancy_text(d));
    }
    Ok(Output {
        command: "search",
        params: params(&[
            ("m", json!(m)),
            ("c", json!(c)),
            ("padding", json!(result.params.padding)),
            ("prune", json!(prune)),
        ]),
        results: vec![json!({
            "m": m,
            "c": c,
            "padding": result.params.padding,
            "searched": result.searched,
            "value_decimal": dec,
            "value_exact": exact,
            "tie": tie,
            "optima": optima,
            "discrepancy": flagged.as_ref().map(discrepancy_json),
        })],
        text,
        csv_header: vec![
            "m",
            "c",
            "rank",
            "degree_sequence",
            "value_decimal",
            "value_exact",
            "tie",
        ],
        csv_rows: rows,
        outcome: Outcome::Success,
    })
}

fn graph_listing(
    command: &'static str,
    n: usize,
    m: usize,
    graphs: &[LabeledGraph],
    h0: Option<&LogCombination>,
    digits: usize,
) -> Result<Output, CliError> {
    let tie = graphs.len() > 1;
    let mut text = format!("{command} n={n} m={m}: {} graph(s)\n", graphs.len());
    if let Some(h) = h0 {
        let _ = writeln!(text, "max h_0 = {} = {h}", decimal(h.approx(), digits));
    }
    if tie {
        let _ = writeln!(text, "TIE: {} optima", graphs.len());
    }
    let mut results = Vec::new();
    let mut rows = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let rank = i + 1;
        let seq = g.degree_sequence();
        let value = decimal(entropy(&seq)?, digits);
        let _ = writeln!(text, "graph {rank}: degree sequence {seq}, I = {value}");
        text.push_str(&edgelist::write(g));
        results.push(json!({
            "rank": rank,
            "degree_sequence": degrees_json(&seq),
            "entropy": value,
            "edges": edges_json(g),
            "tie": tie,
        }));
        rows.push(vec![
            n.to_string(),
            m.to_string(),
            rank.to_string(),
            seq.to_string(),
            value,
            edges_inline(g),
            tie.to_string(),
        ]);
    }
    Ok(Output {
        command,
        params: params(&[("n", json!(n)), ("m", json!(m))]),
        results,
        text,
        csv_header: vec![
            "n",
            "m",
            "rank",
            "degree_sequence",
            "entropy",
            "edges",
            "tie",
        ],
        csv_rows: rows,
        outcome: Outcome::Success,
    })
}

pub fn cmd_construct(n: usize, m: usize, digits: usize) -> Result<Output, CliError> {
    let graphs = construct_extremal_nm(n, m)?;
    graph_listing("construct", n, m, &graphs, None, digits)
}

pub fn cmd_oracle(n: usize, m: usize, digits: usize) -> Result<Output, CliError> {
    let ExtremalResult {
        objective,
        witnesses,
        ..
    } = min_entropy_nm_oracle(n, m)?;
    let mut out = graph_listing("oracle", n, m, &witnesses, Some(&objective), digits)?;
    let entropy = entropy_from_potential(2 * m as u64, objective.approx());
    for r in &mut out.results {
        r["h0_exact"] = json!(objective.to_string());
        r["entropy"] = json!(decimal(entropy, digits));
    }
    Ok(out)
}

pub fn cmd_cross_validate(n_max: usize) -> Result<Output, CliError> {
    if n_max < 2 {
        return Err(CliError::Usage(format!(
            "--n-max must be at least 2, got {n_max}"
        )));
    }
    let report = cross_validate(n_max)?;
    let list = |s: &[DegreeSequence]| {
        s.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mismatches = report.mismatches().count();
    let mut text = format!(
        "cross-validate n in [2, {n_max}], m in [n-1, 2n-3]: {} cases\n",
        report.cases.len()
    );
    for case in report.ties() {
        let _ = writeln!(
            text,
            "  tie at n={} m={}: {}",
            case.n,
            case.m,
            list(&case.oracle)
        );
    }
    for case in report.mismatches() {
        let _ = writeln!(
            text,
            "  MISMATCH n={} m={}: constructed {} oracle {}",
            case.n,
            case.m,
            list(&case.constructed),
            list(&case.oracle)
        );
    }
    let _ = writeln!(text, "{mismatches} mismatches");
    let seqs = |s: &[DegreeSequence]| s.iter().map(degrees_json).collect::<Vec<_>>();
    Ok(Output {
        command: "cross-validate",
        params: params(&[("n_max", json!(n_max))]),
        results: report
            .cases
            .iter()
            .map(|c| {
                json!({
                    "n": c.n,
                    "m": c.m,
                    "constructed": seqs(&c.constructed),
                    "oracle": seqs(&c.oracle),
                    "matches": c.matches(),
                })
            })
            .collect(),
        text,
        csv_header: vec!["n", "m", "constructed", "oracle", "matches"],
        csv_rows: report
            .cases
            .iter()
            .map(|c| {
                vec![
                    c.n.to_string(),
                    c.m.to_string(),
                    list(&c.constructed),
                    list(&c.oracle),
                    c.matches().to_string(),
                ]
            })
            .collect(),
        outcome: if mismatches == 0 {
            Outcome::Success
        } else {
            Outcome::VerificationFailure
        },
    })
}

fn bound_text(b: &Bound) -> String {
    match b {
        Bound::Positive => "> 0".into(),
        Bound::Negative => "< 0".into(),
        Bound::Near { target, tolerance } => {
            format!("= {} ± {}", number(*target), number(*tolerance))
        }
    }
}

fn status_text(s: ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Verified => "verified",
        ClaimStatus::Certified => "certified",
        ClaimStatus::Failed => "failed",
    }
}

fn expectation_text(e: Expectation) -> &'static str {
    match e {
        Expectation::Holds => "holds",
        Expectation::Fails => "fails",
    }
}

fn evidence_json(e: &Evidence, digits: usize) -> Value {
    match e {
        Evidence::Sample {
            label,
            value,
            bound,
            passed,
        } => json!({
            "kind": "sample",
            "label": label,
            "value": decimal(*value, digits),
            "bound": bound_text(bound),
            "passed": passed,
        }),
        Evidence::Certificate {
            label,
            certificate,
            rechecked,
        } => json!({
            "kind": "certificate",
            "label": label,
            "polynomial": certificate.polynomial.to_string(),
            "t0": certificate.t0.to_string(),
            "shifted": certificate.shifted.to_string(),
            "passed": rechecked,
        }),
        Evidence::Inconclusive { label } => json!({
            "kind": "inconclusive",
            "label": label,
            "passed": false,
        }),
        Evidence::Identity { label, holds } => json!({
            "kind": "identity",
            "label": label,
            "passed": holds,
        }),
    }
}

fn evidence_text(e: &Evidence, digits: usize) -> String {
    let mark = if e.passed() { "ok  " } else { "FAIL" };
    let detail = match e {
        Evidence::Sample { value, bound, .. } => {
            format!(": {} ({})", decimal(*value, digits), bound_text(bound))
        }
        Evidence::Certificate { certificate, .. } => format!(
            ": shifted by {} gives {}",
            certificate.t0, certificate.shifted
        ),
        Evidence::Inconclusive { .. } => ": no certificate".into(),
        Evidence::Identity { .. } => String::new(),
    };
    format!("    {mark} {}{detail}\n", e.label())
}

pub fn cmd_verify_claims(grid: SuiteGrid, digits: usize) -> Result<Output, CliError> {
    let reports: Vec<ClaimReport> = run_claim_suite(&grid);
    let mut text = String::new();
    let mut inconsistent = 0;
    for r in &reports {
        let consistent = r.is_consistent();
        inconsistent += usize::from(!consistent);
        let _ = writeln!(
            text,
            "{} {} [{}, expected {}]: {}",
            if consistent { "PASS" } else { "FAIL" },
            r.id,
            status_text(r.status),
            expectation_text(r.expectation),
            r.summary
        );
        for e in &r.evidence {
            text.push_str(&evidence_text(e, digits));
        }
    }
    let _ = writeln!(
        text,
        "{} reports, {inconsistent} inconsistent with expectation",
        reports.len()
    );
    Ok(Output {
        command: "verify-claims",
        params: params(&[
            ("b_max", json!(grid.b_max)),
            ("c_max", json!(grid.c_max)),
            ("m_max", json!(grid.m_max)),
        ]),
        results: reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.id,
                    "summary": r.summary,
                    "status": status_text(r.status),
                    "expectation": expectation_text(r.expectation),
                    "consistent": r.is_consistent(),
                    "evidence": r.evidence.iter().map(|e| evidence_json(e, digits)).collect::<Vec<_>>(),
                })
            })
            .collect(),
        text,
        csv_header: vec!["id", "status", "expectation", "consistent", "evidence", "failed_evidence"],
        csv_rows: reports
            .iter()
            .map(|r| {
                vec![
                    r.id.clone(),
                    status_text(r.status).into(),
                    expectation_text(r.expectation).into(),
                    r.is_consistent().to_string(),
                    r.evidence.len().to_string(),
                    r.evidence.iter().filter(|e| !e.passed()).count().to_string(),
                ]
            })
            .collect(),
        outcome: if inconsistent == 0 {
            Outcome::Success
        } else {
            Outcome::VerificationFailure
        },
    })
}
