use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use torusaf::jacobiperron::{
    export_bratteli, incidence_similarity, jpa_expand, pf_data, AlgebraSummary, FundamentalAFAlgebra, JPAState,
    SimilarityReport,
};
use torusaf::obstruction::{
    analyze as analyze_matrix, quartic_family_matrix, report_for, robustness_report, scan_cubic_family,
    scan_quartic_family, target_profile, QuarticFamilyMember,
};
use torusaf::serde_util;
use torusaf::{BundleAnalysis, Error, IntMatrix, ObstructionReport, Verdict};

use crate::input::{parse_matrix, parse_range};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INAPPLICABLE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

fn fail(code: u8, msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    code
}

fn hypothesis_code(e: &Error) -> u8 {
    match e {
        Error::NoPeriod(_) | Error::PositivizationBudget(_) => EXIT_BUDGET,
        Error::NotSquare(_) | Error::InvalidArgument(_) | Error::InvalidPolynomial(_) => EXIT_INPUT,
        _ => EXIT_INAPPLICABLE,
    }
}

/// Compact JSON on stdout. A closed pipe is not an error for a filter.
fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string(value).expect("serializable report");
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_analysis(a: &BundleAnalysis) {
    let f = &a.flags;
    println!("matrix        {}", a.matrix);
    println!("char          {}", a.char_poly);
    println!("discriminant  {}", a.discriminant);
    println!("partition     inside {}, on {}, outside {}", a.partition.inside, a.partition.on, a.partition.outside);
    println!("unimodular    {}", yes(f.unimodular));
    println!("hyperbolic    {}", yes(f.hyperbolic));
    println!("tight         {}", yes(f.tight));
    println!("irreducible   {}", f.irreducible.map_or("undecided", yes));
    match (a.galois, a.k) {
        (Some(g), Some(k)) => println!("galois        {g} (k = {k})"),
        _ => println!("galois        -"),
    }
    if let Some(n) = a.aut_order {
        println!("aut order     {n}");
    }
}

pub fn analyze(matrix: &str, json: bool) -> u8 {
    let m = match parse_matrix(matrix) {
        Ok(m) => m,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    match analyze_matrix(&m) {
        Ok(a) if json => {
            print_json(&a);
            EXIT_OK
        }
        Ok(a) => {
            print_analysis(&a);
            EXIT_OK
        }
        Err(e) => fail(EXIT_INPUT, e),
    }
}

fn print_report(r: &ObstructionReport) {
    print_analysis(&r.source);
    let orders: Vec<String> = r.target.candidate_orders.iter().map(|t| t.to_string()).collect();
    println!(
        "target        dimension {}, orders {{{}}}, assumptions {}",
        r.target.dimension,
        orders.join(", "),
        r.target.assumptions
    );
    for line in &r.trace {
        println!("  - {line}");
    }
    let verdict = match r.verdict {
        Verdict::Robust => "robust",
        Verdict::NotObstructed => "not obstructed",
        Verdict::Inapplicable => "inapplicable",
    };
    println!("verdict       {verdict}");
}

pub fn obstruct(matrix: &str, target_dim: usize, assume_d_positive: bool, json: bool) -> u8 {
    let m = match parse_matrix(matrix) {
        Ok(m) => m,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    match robustness_report(&m, target_dim, assume_d_positive) {
        Ok(r) => {
            if json {
                print_json(&r);
            } else {
                print_report(&r);
            }
            r.verdict.exit_code() as u8
        }
        Err(e) => fail(EXIT_INPUT, e),
    }
}

pub struct Exports {
    pub dot: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub depth: usize,
}

/// Machine-readable result of `expand`. Fields beyond `digits` are absent
/// when no period was found within the step budget.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpandReport {
    pub matrix: IntMatrix,
    pub squared: bool,
    pub inverted: bool,
    pub contracting_eigenvalue: f64,
    pub steps: usize,
    #[serde(with = "serde_util::bigint_rows")]
    pub digits: Vec<Vec<BigInt>>,
    pub steps_consistent: bool,
    pub algebra: Option<AlgebraSummary>,
    pub eigen_collinear: Option<bool>,
    pub purely_periodic: Option<bool>,
    pub similarity: Option<SimilarityReport>,
    /// `(a, b)` with `multiplier^a = (1/c)^b`, searched for `a <= 6`.
    pub multiplier_relation: Option<(u32, u32)>,
    /// Heuristic only: approximation error halves every `m` steps.
    pub convergence_proxy_halving: bool,
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn digits_text(d: &[BigInt]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn expand(matrix: &str, max_steps: usize, exports: Exports, json: bool) -> u8 {
    let m = match parse_matrix(matrix) {
        Ok(m) => m,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    if max_steps == 0 {
        return fail(EXIT_INPUT, "--max-steps must be at least 1");
    }
    let pf = match pf_data(&m) {
        Ok(pf) => pf,
        Err(e) => return fail(hypothesis_code(&e), e),
    };
    let expansion = match JPAState::from_vector(&pf.eigenvector).and_then(|s| jpa_expand(&s, max_steps)) {
        Ok(e) => e,
        Err(e) => return fail(hypothesis_code(&e), e),
    };
    let mut report = ExpandReport {
        matrix: m.clone(),
        squared: pf.squared,
        inverted: pf.inverted,
        contracting_eigenvalue: pf.contracting_eigenvalue.to_f64(),
        steps: expansion.digits.len(),
        digits: expansion.digits.clone(),
        steps_consistent: expansion.all_steps_consistent(),
        algebra: None,
        eigen_collinear: None,
        purely_periodic: None,
        similarity: None,
        multiplier_relation: None,
        convergence_proxy_halving: expansion.convergence_profile(48).halves_every_block,
    };
    let algebra = match FundamentalAFAlgebra::from_expansion(pf, expansion, max_steps) {
        Ok(a) => Some(a),
        Err(Error::NoPeriod(_)) => None,
        Err(e) => return fail(hypothesis_code(&e), e),
    };
    if let Some(a) = &algebra {
        report.algebra = Some(a.summary());
        report.eigen_collinear = Some(a.is_eigen_collinear());
        report.purely_periodic = Some(a.is_purely_periodic());
        report.similarity = Some(incidence_similarity(&m, a));
        report.multiplier_relation = a.multiplicative_relation(6);
        let diagram = export_bratteli(a, exports.depth);
        if let Some(path) = &exports.dot {
            if let Err(e) = write_file(path, &diagram.to_dot()) {
                return fail(EXIT_INPUT, e);
            }
        }
        if let Some(path) = &exports.json {
            let text = serde_json::to_string_pretty(&diagram).expect("serializable diagram");
            if let Err(e) = write_file(path, &text) {
                return fail(EXIT_INPUT, e);
            }
        }
    }
    if json {
        print_json(&report);
    } else {
        print_expand(&report);
    }
    match algebra {
        Some(_) => EXIT_OK,
        None => {
            eprintln!("error: no period detected within {max_steps} steps (partial expansion shown)");
            EXIT_BUDGET
        }
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn print_expand(r: &ExpandReport) {
    println!("matrix             {}", r.matrix);
    println!("contracting c      {:.12}", r.contracting_eigenvalue);
    println!("squared            {}", yes(r.squared));
    println!("inverted           {}", yes(r.inverted));
    let digits: Vec<String> = r.digits.iter().map(|d| digits_text(d)).collect();
    println!("digits             {}", digits.join(" "));
    println!("step consistency   {}", pass(r.steps_consistent));
    let Some(a) = &r.algebra else {
        println!("period             none within {} steps", r.steps);
        return;
    };
    println!("preperiod          {}", a.preperiod);
    println!("period             {}", a.period);
    let pd: Vec<String> = a.period_digits.iter().map(|d| digits_text(d)).collect();
    println!("period digits      {}", pd.join(" "));
    println!("incidence          {}", a.incidence);
    println!("pf eigenvalue      {:.12} (root of {})", a.pf_eigenvalue, a.pf_eigenvalue_minpoly);
    println!("eigen-collinearity {}", pass(r.eigen_collinear == Some(true)));
    println!("purely periodic    {}", yes(r.purely_periodic == Some(true)));
    if let Some(l) = &r.similarity {
        println!("char(source)       {}", l.source_char);
        println!("char(incidence)    {}", l.incidence_char);
        println!("similarity         {:?}", l.relation);
    }
    match r.multiplier_relation {
        Some((a, b)) => println!("multiplier         pf^{a} = (1/c)^{b}"),
        None => println!("multiplier         no relation pf^a = (1/c)^b with a <= 6"),
    }
    println!("convergence proxy  {} (heuristic)", pass(r.convergence_proxy_halving));
}

/// One line of `index.json`.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub file: String,
    pub params: (i64, i64),
    pub matrix: IntMatrix,
    pub galois: Option<torusaf::GaloisGroupTag>,
    pub k: Option<u64>,
    pub tight: bool,
    pub verdict: Verdict,
}

/// Per-hit file of a quartic scan.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct QuarticScanEntry {
    #[serde(flatten)]
    pub member: QuarticFamilyMember,
    pub report: ObstructionReport,
}

fn run_scan(cubic: bool, first: &str, second: &str) -> Result<Vec<(IndexEntry, String)>, String> {
    let r1 = parse_range(first)?;
    let r2 = parse_range(second)?;
    let mut out = Vec::new();
    if cubic {
        let profile = target_profile(2, false).map_err(|e| e.to_string())?;
        for a in scan_cubic_family(r1, r2).map_err(|e| e.to_string())? {
            let (b, c) = (-a.matrix.get(0, 0), -a.matrix.get(1, 0));
            let params = (i64::try_from(b).unwrap_or(0), i64::try_from(c).unwrap_or(0));
            let report = report_for(a, profile.clone());
            let entry = IndexEntry {
                file: format!("cubic_b{}_c{}.json", params.0, params.1),
                params,
                matrix: report.source.matrix.clone(),
                galois: report.source.galois,
                k: report.source.k,
                tight: report.source.flags.tight,
                verdict: report.verdict,
            };
            out.push((entry, serde_json::to_string_pretty(&report).expect("serializable")));
        }
    } else {
        let profile = target_profile(3, true).map_err(|e| e.to_string())?;
        for member in scan_quartic_family(r1, r2).map_err(|e| e.to_string())? {
            debug_assert_eq!(member.analysis.matrix, quartic_family_matrix(member.a, member.c));
            let report = report_for(member.analysis.clone(), profile.clone());
            let entry = IndexEntry {
                file: format!("quartic_a{}_c{}.json", member.a, member.c),
                params: (member.a, member.c),
                matrix: member.analysis.matrix.clone(),
                galois: member.analysis.galois,
                k: member.analysis.k,
                tight: member.analysis.flags.tight,
                verdict: report.verdict,
            };
            let file = QuarticScanEntry { member, report };
            out.push((entry, serde_json::to_string_pretty(&file).expect("serializable")));
        }
    }
    Ok(out)
}

pub fn scan(cubic: bool, first: &str, second: &str, out: Option<&Path>, jobs: Option<usize>, json: bool) -> u8 {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return fail(EXIT_INPUT, "--jobs must be at least 1");
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let hits = match pool.install(|| run_scan(cubic, first, second)) {
        Ok(h) => h,
        Err(e) => return fail(EXIT_INPUT, e),
    };
    let index: Vec<&IndexEntry> = hits.iter().map(|(e, _)| e).collect();
    if let Some(dir) = out {
        if let Err(e) = fs::create_dir_all(dir) {
            return fail(EXIT_INPUT, format!("cannot create {}: {e}", dir.display()));
        }
        for (entry, body) in &hits {
            if let Err(e) = write_file(&dir.join(&entry.file), body) {
                return fail(EXIT_INPUT, e);
            }
        }
        let text = serde_json::to_string_pretty(&index).expect("serializable index");
        if let Err(e) = write_file(&dir.join("index.json"), &text) {
            return fail(EXIT_INPUT, e);
        }
    }
    if json {
        print_json(&index);
    } else {
        let (p1, p2) = if cubic { ("b", "c") } else { ("a", "c") };
        let matrices: Vec<String> = index.iter().map(|e| e.matrix.to_string()).collect();
        let w = matrices.iter().map(String::len).max().unwrap_or(0).max(6);
        println!("{:>4} {:>4}  {:<w$} {:<6} {:<6} verdict", p1, p2, "matrix", "galois", "tight");
        for (e, m) in index.iter().zip(&matrices) {
            let g = e.galois.map_or("-".to_string(), |g| g.to_string());
            println!("{:>4} {:>4}  {:<w$} {:<6} {:<6} {:?}", e.params.0, e.params.1, m, g, yes(e.tight), e.verdict);
        }
        println!("{} hit(s)", index.len());
    }
    EXIT_OK
}
