//! The `analyze` report: `key: value` lines, witness sections and a closing summary.

use std::fmt;

use extendix::certificate::{self, Claim};
use extendix::connectivity;
use extendix::extendability::{self, ExtendabilityError};
use extendix::format::{Instance, InstanceKind};
use extendix::graph::{BipartiteGraph, Digraph, Edge, ZeroOneMatrix};
use extendix::matching::{self, EdgeTag, Matching};
use extendix::matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    /// Witness lines in certificate syntax.
    pub body: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub kind: InstanceKind,
    pub fields: Vec<(String, String)>,
    pub sections: Vec<Section>,
    pub summary: String,
    /// Outcome of the `--k` query, if one was asked.
    pub query: Option<bool>,
}

impl AnalysisReport {
    fn new(kind: InstanceKind) -> Self {
        AnalysisReport { kind, fields: Vec::new(), sections: Vec::new(), summary: String::new(), query: None }
    }

    fn field(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    fn section(&mut self, title: impl Into<String>, body: impl ToString) {
        self.sections.push(Section { title: title.into(), body: body.to_string() });
    }

    pub fn human(&self) -> String {
        let mut out = format!("{}\n", self.summary);
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.fields {
            out.push_str(&format!("  {k:width$}  {v}\n"));
        }
        for s in &self.sections {
            out.push_str(&format!("  {}:\n", s.title));
            for line in s.body.lines() {
                out.push_str(&format!("    {line}\n"));
            }
        }
        out
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind: {}", self.kind)?;
        for (k, v) in &self.fields {
            writeln!(f, "{k}: {v}")?;
        }
        for s in &self.sections {
            writeln!(f, "section: {}", s.title)?;
            write!(f, "{}", s.body)?;
            writeln!(f, "end")?;
        }
        writeln!(f, "summary: {}", self.summary)
    }
}

fn plural(count: usize, word: &str) -> String {
    format!("{count} {word}{}", if count == 1 { "" } else { "s" })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn v_list(vs: &[usize]) -> String {
    join(vs.iter().map(|v| format!("v{}", v + 1)))
}

/// Attaches the certificate witness for `claim` at `k` when it fails.
fn negative_section(report: &mut AnalysisReport, instance: &Instance, claim: Claim, k: usize) {
    if let Ok(cert) = certificate::certify(instance, claim, k) {
        if !cert.holds {
            let title = claim.to_string().replacen('k', &k.to_string(), 1);
            report.section(format!("not {title}"), cert.witness);
        }
    }
}

pub fn analyze(
    instance: &Instance,
    matching: Option<&Matching>,
    k: Option<usize>,
) -> Result<AnalysisReport, String> {
    match instance {
        Instance::Bipartite(g) => analyze_bipartite(instance, g, matching, k),
        Instance::Digraph(d) => analyze_digraph(instance, d, k),
        Instance::Matrix(a) => analyze_matrix(instance, a, k),
    }
}

fn analyze_bipartite(
    instance: &Instance,
    g: &BipartiteGraph,
    matching: Option<&Matching>,
    k: Option<usize>,
) -> Result<AnalysisReport, String> {
    let n = g.n();
    let mut r = AnalysisReport::new(InstanceKind::Bipartite);
    r.field("n", n);
    r.field("edges", g.edge_count());
    r.field("connected", yes_no(g.is_connected()));
    let count = matching::count_perfect_matchings(g).map_or("too large to count".to_string(), |c| c.to_string());
    r.field("perfect_matchings", count);
    let m = match matching {
        Some(m) => Some(m.clone()),
        None => matching::first_perfect_matching(g),
    };
    let Some(m) = m else {
        negative_section(&mut r, instance, Claim::KExtendable, 0);
        r.summary = "no perfect matching, not 0-extendable".into();
        r.query = k.map(|_| false);
        return Ok(r);
    };
    r.field("matching", join(m.edges()));
    let tags = matching::classify_edges(g).map_err(|e| e.to_string())?;
    r.field(
        "edge_classes",
        format!(
            "fixed_single={} fixed_double={} allowed_nonfixed={}",
            tags.count(EdgeTag::FixedSingle),
            tags.count(EdgeTag::FixedDouble),
            tags.count(EdgeTag::Allowed)
        ),
    );
    for e in tags.edges_with(EdgeTag::FixedSingle) {
        r.field("fixed_single", e);
    }
    let max = extendability::max_extendability(g);
    r.field("max_extendability", max);
    if max >= 1 {
        r.field("certificate", format!("certify --claim k-extendable --k {max}"));
    }
    let components = extendability::elementary_components_with(g, &m).map_err(|e| e.to_string())?;
    let elementary = components.elementary().count();
    let doubles = components.fixed_double().count();
    r.field("elementary_components", elementary);
    r.field("fixed_double_edges", doubles);
    r.field("strong_components", components.strong_components.len());
    for (piece, &sc) in components.pieces.iter().zip(&components.bijection) {
        let kind = match piece.kind {
            extendability::PieceKind::Elementary => "elementary",
            extendability::PieceKind::FixedDouble => "fixed_double",
        };
        let verts = join(
            piece.u.iter().map(|u| format!("u{}", u + 1)).chain(piece.w.iter().map(|w| format!("w{}", w + 1))),
        );
        r.field("component", format!("{kind} {verts} <-> {}", v_list(&components.strong_components[sc])));
    }
    let target = if max == 0 { 1 } else { max + 1 };
    if target < n {
        negative_section(&mut r, instance, Claim::KExtendable, target);
    }
    let mut summary = if max == 0 {
        "not 1-extendable".to_string()
    } else {
        format!("{max}-extendable, not {}-extendable", max + 1)
    };
    summary.push_str(&format!("; {}", plural(elementary, "elementary component")));
    if doubles > 0 {
        summary.push_str(&format!(", {}", plural(doubles, "fixed double edge")));
    }
    r.summary = summary;
    if let Some(k) = k {
        let check = extendability::is_k_extendable(g, k).map_err(|e: ExtendabilityError| e.to_string())?;
        r.field("query", format!("{k}-extendable: {}", yes_no(check.holds)));
        if !check.holds && target != k {
            negative_section(&mut r, instance, Claim::KExtendable, k);
        }
        r.query = Some(check.holds);
    }
    Ok(r)
}

fn analyze_digraph(instance: &Instance, d: &Digraph, k: Option<usize>) -> Result<AnalysisReport, String> {
    let mut r = AnalysisReport::new(InstanceKind::Digraph);
    r.field("n", d.n());
    r.field("arcs", d.arc_count());
    let sccs = connectivity::strong_components(d);
    r.field("strong_components", sccs.len());
    for c in &sccs {
        r.field("component", v_list(c));
    }
    let strong = connectivity::is_strong(d);
    r.field("strong", yes_no(strong));
    let kappa = connectivity::vertex_connectivity(d);
    r.field("kappa", kappa);
    if let Some(s) = connectivity::minimum_separator(d) {
        r.field("minimum_separator", v_list(&s));
    }
    if strong && d.n() >= 2 {
        let dec = connectivity::ear_decomposition_digraph(d, None).map_err(|e| e.to_string())?;
        r.field("ears", dec.ears.len());
        for ear in &dec.ears {
            r.field("ear", ear);
        }
        r.summary = format!("strong, κ={kappa}; ear decomposition: {}", plural(dec.ears.len(), "ear"));
    } else if strong {
        r.summary = "strong, single vertex".into();
    } else {
        r.summary = format!("not strong; {}", plural(sccs.len(), "strong component"));
    }
    if let Some(k) = k {
        let check = connectivity::is_k_strong(d, k);
        r.field("query", format!("{k}-strong: {}", yes_no(check.holds)));
        if !check.holds {
            negative_section(&mut r, instance, Claim::KStrong, k);
        }
        r.query = Some(check.holds);
    }
    Ok(r)
}

fn block_body(w: &matrix::DecompositionWitness) -> String {
    format!("rows: {}\ncols: {}\n", join(w.rows.iter().map(|x| x + 1)), join(w.cols.iter().map(|x| x + 1)))
}

fn analyze_matrix(instance: &Instance, a: &ZeroOneMatrix, k: Option<usize>) -> Result<AnalysisReport, String> {
    let n = a.n();
    let mut r = AnalysisReport::new(InstanceKind::Matrix);
    r.field("n", n);
    r.field("ones", (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| a.get(i, j)).count());
    r.field("positive_main_diagonal", yes_no(a.has_positive_main_diagonal()));
    let diagonal = matching::first_perfect_matching(&extendix::correspondence::bipartite_of_matrix(a));
    r.field("nonzero_diagonal", diagonal.as_ref().map_or("none".to_string(), |m| {
        join(m.edges().iter().map(|e: &Edge| format!("({},{})", e.u + 1, e.w + 1)))
    }));
    let partly = matrix::is_partly_decomposable(a);
    r.field("partly_decomposable", yes_no(partly.holds));
    if let Some(w) = &partly.witness {
        r.section("partly decomposable", block_body(w));
    }
    let reducible = matrix::is_reducible(a);
    r.field("reducible", yes_no(reducible.holds));
    if let Some(w) = &reducible.witness {
        r.section("reducible", block_body(w));
    }
    // largest k below n for which the property holds, scanning upward
    let mut max_indec = None;
    for j in 0..n.max(1) {
        match matrix::is_k_partly_decomposable(a, j) {
            Ok(c) if !c.holds => max_indec = Some(j),
            Ok(_) => {
                negative_section(&mut r, instance, Claim::KIndecomposable, j);
                break;
            }
            Err(_) => break,
        }
    }
    let mut max_irr = None;
    for j in 1..n {
        match matrix::is_k_reducible(a, j) {
            Ok(c) if !c.holds => max_irr = Some(j),
            Ok(_) => {
                negative_section(&mut r, instance, Claim::KIrreducible, j);
                break;
            }
            Err(_) => break,
        }
    }
    let show = |m: Option<usize>| m.map_or("none".to_string(), |m| m.to_string());
    r.field("max_indecomposable", show(max_indec));
    r.field("max_irreducible", show(max_irr));
    let mut parts = Vec::new();
    if diagonal.is_none() {
        parts.push("no nonzero diagonal".to_string());
    }
    parts.push(if partly.holds { "partly decomposable" } else { "fully indecomposable" }.to_string());
    if let Some(m) = max_indec.filter(|&m| m >= 2) {
        parts.push(format!("{m}-indecomposable"));
    }
    parts.push(if reducible.holds { "reducible" } else { "irreducible" }.to_string());
    if let Some(m) = max_irr.filter(|&m| m >= 2) {
        parts.push(format!("{m}-irreducible"));
    }
    r.summary = parts.join(", ");
    if let Some(k) = k {
        let check = matrix::is_k_partly_decomposable(a, k).map_err(|e| e.to_string())?;
        r.field("query", format!("{k}-indecomposable: {}", yes_no(!check.holds)));
        if check.holds && max_indec.map_or(0, |m| m + 1) != k {
            negative_section(&mut r, instance, Claim::KIndecomposable, k);
        }
        r.query = Some(!check.holds);
    }
    Ok(r)
}
