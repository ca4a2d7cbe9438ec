//! Deterministic corpus generation and certificate reporting.
//!
//! All randomness flows from a single 64-bit seed; two runs with the same
//! seed and sizes produce bytewise identical directories.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use vk_core::{
    Elem, FiniteSemigroup, RationalSubset, ReesSemigroup, SandwichMatrix, Semigroup,
    ValenceAutomaton,
};

use crate::format;

pub struct Sizes {
    pub semigroups: usize,
    pub rees_per_group: usize,
    pub valence: usize,
    pub max_coord: usize,
}

impl Default for Sizes {
    fn default() -> Self {
        Sizes {
            semigroups: 10,
            rees_per_group: 2,
            valence: 204,
            max_coord: 3,
        }
    }
}

fn groups() -> Vec<FiniteSemigroup> {
    vec![
        FiniteSemigroup::cyclic(2),
        FiniteSemigroup::cyclic(3),
        FiniteSemigroup::symmetric_3(),
    ]
}

/// The closure of one or two random self-maps of a 3-point set under
/// composition, together with the identity map; rejected above 8 elements.
fn transformation_monoid(r: &mut ChaCha8Rng) -> Option<FiniteSemigroup> {
    let n = 3usize;
    let k = r.gen_range(1..=2);
    let mut maps: Vec<Vec<usize>> = vec![(0..n).collect()];
    for _ in 0..k {
        let f: Vec<usize> = (0..n).map(|_| r.gen_range(0..n)).collect();
        if !maps.contains(&f) {
            maps.push(f);
        }
    }
    loop {
        let mut added = false;
        let cur = maps.clone();
        for f in &cur {
            for g in &cur {
                let fg: Vec<usize> = (0..n).map(|x| f[g[x]]).collect();
                if !maps.contains(&fg) {
                    maps.push(fg);
                    added = true;
                }
            }
        }
        if maps.len() > 8 {
            return None;
        }
        if !added {
            break;
        }
    }
    let m = maps.len();
    let idx = |f: &Vec<usize>| maps.iter().position(|x| x == f).unwrap();
    let table: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let fg: Vec<usize> = (0..n).map(|x| maps[a][maps[b][x]]).collect();
                    idx(&fg)
                })
                .collect()
        })
        .collect();
    FiniteSemigroup::validate_table(table).ok()
}

fn random_rees(
    r: &mut ChaCha8Rng,
    g: &FiniteSemigroup,
    ni: usize,
    nj: usize,
    with_zero: bool,
) -> ReesSemigroup {
    let ord = g.order();
    let mut rows: Vec<Vec<Option<Elem>>> = (0..nj)
        .map(|_| {
            (0..ni)
                .map(|_| {
                    if with_zero && r.gen_bool(0.3) {
                        None
                    } else {
                        Some(Elem::Idx(r.gen_range(0..ord)))
                    }
                })
                .collect()
        })
        .collect();
    for j in 0..nj {
        if rows[j].iter().all(|e| e.is_none()) {
            let i = r.gen_range(0..ni);
            rows[j][i] = Some(Elem::Idx(r.gen_range(0..ord)));
        }
    }
    for i in 0..ni {
        if (0..nj).all(|j| rows[j][i].is_none()) {
            let j = r.gen_range(0..nj);
            rows[j][i] = Some(Elem::Idx(r.gen_range(0..ord)));
        }
    }
    let p = SandwichMatrix::new(nj, ni, rows).unwrap();
    ReesSemigroup::new(Semigroup::Finite(g.clone()), p, with_zero).unwrap()
}

fn random_valence(r: &mut ChaCha8Rng, owner: Semigroup) -> ValenceAutomaton {
    let alphabet = vec!["a".to_string(), "b".to_string()];
    let elems = owner.elements().unwrap();
    let pick_subset = |r: &mut ChaCha8Rng| {
        let chosen: Vec<Elem> = elems.iter().filter(|_| r.gen_bool(0.4)).cloned().collect();
        RationalSubset::from_elements(owner.clone(), chosen).unwrap()
    };
    let x0 = pick_subset(r);
    let x1 = pick_subset(r);
    let q = r.gen_range(1..=4);
    let ne = r.gen_range(1..=3 * q);
    let edges: Vec<(usize, Elem, Vec<usize>, usize)> = (0..ne)
        .map(|_| {
            let word = if r.gen_bool(0.3) {
                Vec::new()
            } else {
                vec![r.gen_range(0..alphabet.len())]
            };
            (
                r.gen_range(0..q),
                elems[r.gen_range(0..elems.len())].clone(),
                word,
                r.gen_range(0..q),
            )
        })
        .collect();
    let terminal: Vec<usize> = (0..q).filter(|_| r.gen_bool(0.5)).collect();
    ValenceAutomaton::new(owner, alphabet, q, 0, terminal, edges, x0, x1).unwrap()
}

/// Writes semigroup, Rees and valence instances plus a manifest under `out`.
pub fn generate(out: &Path, seed: u64, sizes: &Sizes) -> Result<Value> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    for sub in ["semigroups", "rees", "valence"] {
        fs::create_dir_all(out.join(sub))
            .with_context(|| format!("cannot create {}", out.join(sub).display()))?;
    }

    let mut sgp_files = Vec::new();
    let mut seen = Vec::new();
    let mut tries = 0;
    while seen.len() < sizes.semigroups && tries < 50 * sizes.semigroups {
        tries += 1;
        if let Some(m) = transformation_monoid(&mut r) {
            if !seen.contains(&m) {
                seen.push(m);
            }
        }
    }
    for (k, m) in seen.iter().enumerate() {
        let rel = format!("semigroups/sgp_{k:03}.json");
        format::write_json(&out.join(&rel), &format::finite_semigroup_json(m))?;
        sgp_files.push(rel);
    }

    let mut rees_files = Vec::new();
    let mut instances = Vec::new();
    for g in groups() {
        for with_zero in [false, true] {
            for _ in 0..sizes.rees_per_group {
                let ni = r.gen_range(1..=sizes.max_coord);
                let nj = r.gen_range(1..=sizes.max_coord);
                instances.push(random_rees(&mut r, &g, ni, nj, with_zero));
            }
        }
    }
    for (k, rees) in instances.iter().enumerate() {
        let rel = format!("rees/rees_{k:03}.json");
        format::write_json(&out.join(&rel), &format::rees_json(rees))?;
        rees_files.push(rel);
    }

    let mut valence_files = Vec::new();
    for k in 0..sizes.valence {
        let rees = &instances[k % instances.len()];
        let v = random_valence(&mut r, Semigroup::Rees(rees.clone()));
        let rel = format!("valence/val_{k:03}.json");
        format::write_json(&out.join(&rel), &format::valence_json(&v))?;
        let hint = if rees.with_zero() {
            "nozero,to-group"
        } else {
            "to-group"
        };
        valence_files.push(json!({
            "path": rel,
            "rees": rees_files[k % rees_files.len()],
            "pipeline_hint": hint,
        }));
    }

    let manifest = json!({
        "seed": seed,
        "semigroups": sgp_files,
        "rees": rees_files,
        "valence": valence_files,
        "counts": {
            "semigroups": sgp_files.len(),
            "rees": rees_files.len(),
            "valence": valence_files.len(),
        },
    });
    format::write_json(&out.join("manifest.json"), &manifest)?;
    Ok(manifest)
}

/// Collects `*.cert.json` files under `dir`, recursively.
fn collect_certs(dir: &Path, out: &mut Vec<(String, Value)>) -> Result<()> {
    if !dir.is_dir() {
        return Ok(());
    }
    let mut entries: Vec<_> = fs::read_dir(dir)
        .with_context(|| format!("cannot read {}", dir.display()))?
        .collect::<std::io::Result<Vec<_>>>()?;
    entries.sort_by_key(|e| e.path());
    for entry in entries {
        let path = entry.path();
        if path.is_dir() {
            collect_certs(&path, out)?;
        } else if path
            .file_name()
            .and_then(|n| n.to_str())
            .is_some_and(|n| n.ends_with(".cert.json"))
        {
            out.push((path.display().to_string(), format::load_json(&path)?));
        }
    }
    Ok(())
}

/// Prints a human table and returns the machine-readable summary plus the
/// number of non-equivalent certificates.
pub fn report(dir: &Path) -> Result<(Value, usize)> {
    let mut certs = Vec::new();
    collect_certs(dir, &mut certs)?;
    let mut rows = Vec::new();
    let mut failures = 0;
    println!("{:<40} {:<28} {:<12} counterexample", "instance", "pipeline", "verdict");
    for (path, cert) in &certs {
        let input = cert["input"].as_str().unwrap_or("?");
        let pipeline = cert["pipeline"]
            .as_array()
            .map(|steps| {
                steps
                    .iter()
                    .filter_map(Value::as_str)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .unwrap_or_else(|| "?".into());
        let verdict = cert["verdict"].as_str().unwrap_or("?");
        let counterexample = match cert["counterexample"].as_array() {
            Some(w) => w
                .iter()
                .filter_map(Value::as_str)
                .collect::<Vec<_>>()
                .join(""),
            None => String::new(),
        };
        if verdict != "equivalent" {
            failures += 1;
        }
        println!("{input:<40} {pipeline:<28} {verdict:<12} {counterexample}");
        rows.push(json!({
            "certificate": path,
            "input": input,
            "pipeline": pipeline,
            "verdict": verdict,
            "counterexample": cert["counterexample"].clone(),
        }));
    }
    let summary = json!({
        "certificates": rows.len(),
        "failures": failures,
        "rows": rows,
    });
    Ok((summary, failures))
}
