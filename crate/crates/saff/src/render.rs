//! Human-readable names: `Sym^3(C^3)^∨`, `Λ^2(C^4)`, `Σ^(3,1)(C^4)^∨`.

use saff_core::catalog::{CatalogEntry, CatalogSummary};
use saff_core::filtration::{Filtration, FiltrationKind};
use saff_core::rationality::Verdict;
use saff_core::schur::{Weight, WeightMultiset};

use crate::format::FiltrationChecks;

fn plain_name(w: &Weight) -> String {
    let n = w.rank();
    let parts: Vec<u32> = w.parts().iter().copied().filter(|&p| p > 0).collect();
    let base = format!("C^{n}");
    match parts.as_slice() {
        [] => "C".to_string(),
        [1] => base,
        [k] => format!("Sym^{k}({base})"),
        ones if ones.iter().all(|&p| p == 1) => format!("Λ^{}({base})", ones.len()),
        _ => {
            let list: Vec<String> = parts.iter().map(u32::to_string).collect();
            format!("Σ^({})({base})", list.join(","))
        }
    }
}

/// Name of an irreducible, written as a dual when that uses fewer boxes.
pub fn irrep_name(w: &Weight) -> String {
    let d = w.dual();
    if d.size() < w.size() {
        let name = plain_name(&d);
        if name.ends_with(')') {
            format!("{name}^∨")
        } else {
            format!("({name})^∨")
        }
    } else {
        plain_name(w)
    }
}

pub fn multiset_name(m: &WeightMultiset) -> String {
    if m.is_empty() {
        return "0".to_string();
    }
    let mut terms: Vec<(u32, &Weight, u32)> = m
        .iter()
        .map(|(w, k)| (w.size().min(w.dual().size()), w, k))
        .collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(a.1)));
    terms
        .iter()
        .map(|(_, w, k)| {
            if *k > 1 {
                format!("{k}·{}", irrep_name(w))
            } else {
                irrep_name(w)
            }
        })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

pub fn filtration_text(f: &Filtration, checks: &FiltrationChecks, seed: u64) -> String {
    let symbol = match f.kind() {
        FiltrationKind::Socle => "Q",
        FiltrationKind::Radical => "Q'",
    };
    let mut out = format!(
        "{} filtration, chain dimensions {:?}\n",
        f.kind(),
        f.chain_dims()
    );
    for (i, layer) in f.layers().iter().enumerate() {
        out += &format!(
            "  {symbol}_{i} = {}   [{layer}, dim {}]\n",
            multiset_name(layer),
            layer.dim()
        );
    }
    out += &format!(
        "checks: duality={} blocks={} embedding={} degree_bound={}\nseed: {seed}\n",
        checks.duality, checks.blocks, checks.embedding, checks.degree_bound
    );
    out
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut out = format!("outcome: {}\n", v.outcome);
    if let Some(w) = &v.witness {
        out += &format!(
            "witness: W1 = {}, W2 = {}\n",
            multiset_name(&w.w1),
            multiset_name(&w.w2)
        );
    }
    for e in &v.evidence {
        out += &format!("  [{}] {} → {}\n", e.condition, e.clause, e.result);
    }
    if !v.search_complete {
        out += "search over W was greedy (incomplete)\n";
    }
    out += &format!("seed: {}\n", v.seed);
    out
}

pub fn catalog_row(e: &CatalogEntry) -> String {
    format!(
        "{:<12} {:<28} {:<40} {}",
        e.trigger.as_str(),
        e.verdict.outcome.as_str(),
        multiset_name(&e.q),
        multiset_name(&e.s)
    )
}

pub fn catalog_footer(s: &CatalogSummary, seed: u64) -> String {
    let mut out = format!("entries: {}\n", s.total);
    for (k, v) in &s.by_trigger {
        out += &format!("  trigger {k:<26} {v}\n");
    }
    for (k, v) in &s.by_outcome {
        out += &format!("  outcome {k:<26} {v}\n");
    }
    out += &format!("seed: {seed}\n");
    out
}
