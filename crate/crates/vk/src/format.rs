//! JSON file formats for semigroups, Rees structures, automata and valence
//! machines, plus the element encodings used inside them.
//!
//! Element encodings, resolved against the owning semigroup:
//! an integer is an index (finite tables) or a value (the integers), a pair
//! `[a, b]` is bicyclic, `["rees", i, t, j]` is a Rees triple with `t`
//! encoded over the base, and `"0"` is the adjoined zero.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};
use vk_core::{
    Dfa, Elem, FiniteSemigroup, Nfa, RationalSubset, ReesSemigroup, SAutomaton, SandwichMatrix,
    Semigroup, VEdge, ValenceAutomaton,
};

pub fn load_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("invalid JSON in {}", path.display()))
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| anyhow!("expected a non-negative integer for {what}"))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name).ok_or_else(|| anyhow!("missing field \"{name}\""))
}

/// Built-in semigroup names accepted wherever a file reference is.
pub fn builtin_semigroup(name: &str) -> Option<Semigroup> {
    match name {
        "Z" => Some(Semigroup::Integers),
        "bicyclic" => Some(Semigroup::Bicyclic),
        "trivial" => Some(Semigroup::Finite(FiniteSemigroup::trivial())),
        "S3" => Some(Semigroup::Finite(FiniteSemigroup::symmetric_3())),
        _ => name
            .strip_prefix('Z')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k >= 1)
            .map(|k| Semigroup::Finite(FiniteSemigroup::cyclic(k))),
    }
}

pub fn parse_finite_semigroup(v: &Value) -> Result<FiniteSemigroup> {
    let obj = v.as_object().ok_or_else(|| anyhow!("semigroup must be an object"))?;
    let n = as_usize(field(obj, "n")?, "n")?;
    let rows = field(obj, "table")?
        .as_array()
        .ok_or_else(|| anyhow!("table must be an array of rows"))?;
    if rows.len() != n {
        bail!("table has {} rows, expected {}", rows.len(), n);
    }
    let mut table = Vec::with_capacity(n);
    for row in rows {
        let row = row.as_array().ok_or_else(|| anyhow!("table row must be an array"))?;
        let mut out = Vec::with_capacity(row.len());
        for e in row {
            out.push(as_usize(e, "table entry")?);
        }
        table.push(out);
    }
    let mut s = FiniteSemigroup::validate_table(table).map_err(|e| anyhow!("{e:?}"))?;
    if let Some(labels) = obj.get("labels") {
        let labels = labels
            .as_array()
            .ok_or_else(|| anyhow!("labels must be an array of strings"))?
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| anyhow!("labels must be strings"))
            })
            .collect::<Result<Vec<_>>>()?;
        s = s.with_labels(labels).map_err(|e| anyhow!("{e:?}"))?;
    }
    Ok(s)
}

pub fn finite_semigroup_json(s: &FiniteSemigroup) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(s.order()));
    obj.insert("table".into(), json!(s.rows()));
    if let Some(labels) = s.labels() {
        obj.insert("labels".into(), json!(labels));
    }
    Value::Object(obj)
}

pub fn parse_rees(v: &Value, dir: &Path) -> Result<ReesSemigroup> {
    let obj = v.as_object().ok_or_else(|| anyhow!("rees must be an object"))?;
    let base = parse_semigroup_ref(field(obj, "base")?, dir)?;
    let ni = as_usize(field(obj, "I")?, "I")?;
    let nj = as_usize(field(obj, "J")?, "J")?;
    let with_zero = field(obj, "with_zero")?
        .as_bool()
        .ok_or_else(|| anyhow!("with_zero must be a boolean"))?;
    let rows = field(obj, "P")?
        .as_array()
        .ok_or_else(|| anyhow!("P must be an array of rows"))?;
    if rows.len() != nj {
        bail!("P has {} rows, expected J = {}", rows.len(), nj);
    }
    let mut entries = Vec::with_capacity(nj);
    for row in rows {
        let row = row.as_array().ok_or_else(|| anyhow!("P row must be an array"))?;
        if row.len() != ni {
            bail!("P row has {} entries, expected I = {}", row.len(), ni);
        }
        let mut out = Vec::with_capacity(ni);
        for e in row {
            if e == &json!("0") {
                out.push(None);
            } else {
                out.push(Some(parse_elem(e, &base)?));
            }
        }
        entries.push(out);
    }
    let p = SandwichMatrix::new(nj, ni, entries).map_err(|e| anyhow!("{e:?}"))?;
    ReesSemigroup::new(base, p, with_zero).map_err(|e| anyhow!("{e:?}"))
}

pub fn rees_json(r: &ReesSemigroup) -> Value {
    let rows: Vec<Value> = (0..r.j_count())
        .map(|j| {
            (0..r.i_count())
                .map(|i| match r.sandwich().get(j, i) {
                    Some(e) => elem_json(e, r.base()),
                    None => json!("0"),
                })
                .collect()
        })
        .collect();
    json!({
        "base": semigroup_json(r.base()),
        "I": r.i_count(),
        "J": r.j_count(),
        "P": rows,
        "with_zero": r.with_zero(),
    })
}

/// A semigroup reference: a built-in name, a path to a JSON file, or an
/// inline object (finite table or Rees description).
pub fn parse_semigroup_ref(v: &Value, dir: &Path) -> Result<Semigroup> {
    match v {
        Value::String(name) => {
            if let Some(s) = builtin_semigroup(name) {
                return Ok(s);
            }
            let path: PathBuf = if Path::new(name).is_absolute() {
                name.into()
            } else {
                dir.join(name)
            };
            let inner = load_json(&path)?;
            let next_dir = path.parent().unwrap_or(dir).to_path_buf();
            parse_semigroup_ref(&inner, &next_dir)
        }
        Value::Object(obj) if obj.contains_key("table") => {
            Ok(Semigroup::Finite(parse_finite_semigroup(v)?))
        }
        Value::Object(obj) if obj.contains_key("P") => {
            Ok(Semigroup::Rees(parse_rees(v, dir)?))
        }
        _ => bail!("semigroup reference must be a name, a path, or an inline object"),
    }
}

pub fn semigroup_json(s: &Semigroup) -> Value {
    match s {
        Semigroup::Finite(f) => finite_semigroup_json(f),
        Semigroup::Integers => json!("Z"),
        Semigroup::Bicyclic => json!("bicyclic"),
        Semigroup::Rees(r) => rees_json(r),
    }
}

pub fn parse_elem(v: &Value, owner: &Semigroup) -> Result<Elem> {
    let e = match (owner, v) {
        (Semigroup::Finite(_), Value::Number(_)) => Elem::Idx(as_usize(v, "element")?),
        (Semigroup::Integers, Value::Number(n)) => {
            Elem::Int(n.as_i64().ok_or_else(|| anyhow!("integer element out of range"))?)
        }
        (Semigroup::Bicyclic, Value::Array(pair)) if pair.len() == 2 => Elem::Bicyclic(
            as_usize(&pair[0], "bicyclic component")? as u64,
            as_usize(&pair[1], "bicyclic component")? as u64,
        ),
        (Semigroup::Rees(_), Value::String(s)) if s == "0" => Elem::Zero,
        (Semigroup::Rees(r), Value::Array(parts))
            if parts.len() == 4 && parts[0] == json!("rees") =>
        {
            Elem::Triple(
                as_usize(&parts[1], "row index")?,
                Box::new(parse_elem(&parts[2], r.base())?),
                as_usize(&parts[3], "column index")?,
            )
        }
        _ => bail!("element {v} does not fit the semigroup"),
    };
    if !owner.contains(&e) {
        bail!("element {v} is out of range for the semigroup");
    }
    Ok(e)
}

pub fn elem_json(e: &Elem, owner: &Semigroup) -> Value {
    match e {
        Elem::Idx(x) => json!(x),
        Elem::Int(k) => json!(k),
        Elem::Bicyclic(a, b) => json!([a, b]),
        Elem::Zero => json!("0"),
        Elem::Triple(i, t, j) => {
            let base = owner
                .as_rees()
                .map(|r| r.base().clone())
                .unwrap_or_else(|| owner.clone());
            json!(["rees", i, elem_json(t, &base), j])
        }
    }
}

fn parse_terminal(v: &Value, vertices: usize) -> Result<Vec<usize>> {
    let list = v
        .as_array()
        .ok_or_else(|| anyhow!("terminal must be an array of vertex indices"))?;
    let mut out = Vec::with_capacity(list.len());
    for t in list {
        let t = as_usize(t, "terminal vertex")?;
        if t >= vertices {
            bail!("terminal vertex {t} out of range");
        }
        out.push(t);
    }
    Ok(out)
}

pub fn parse_s_automaton(v: &Value, dir: &Path) -> Result<SAutomaton> {
    let obj = v.as_object().ok_or_else(|| anyhow!("automaton must be an object"))?;
    let owner = parse_semigroup_ref(field(obj, "semigroup")?, dir)?;
    parse_s_automaton_body(obj, &owner)
}

fn parse_s_automaton_body(obj: &Map<String, Value>, owner: &Semigroup) -> Result<SAutomaton> {
    let vertices = as_usize(field(obj, "vertices")?, "vertices")?;
    let initial = as_usize(field(obj, "initial")?, "initial")?;
    let terminal = parse_terminal(field(obj, "terminal")?, vertices)?;
    let mut edges = Vec::new();
    for e in field(obj, "edges")?
        .as_array()
        .ok_or_else(|| anyhow!("edges must be an array"))?
    {
        let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| {
            anyhow!("each edge must be [from, element, to]")
        })?;
        edges.push((
            as_usize(&e[0], "edge source")?,
            parse_elem(&e[1], owner)?,
            as_usize(&e[2], "edge target")?,
        ));
    }
    SAutomaton::new(owner.clone(), vertices, initial, terminal, edges)
        .map_err(|e| anyhow!("{e:?}"))
}

pub fn s_automaton_json(a: &SAutomaton) -> Value {
    let edges: Vec<Value> = a
        .edges
        .iter()
        .map(|e| json!([e.from, elem_json(&e.label, &a.owner), e.to]))
        .collect();
    let terminal: Vec<usize> = (0..a.vertices).filter(|&q| a.terminal[q]).collect();
    json!({
        "semigroup": semigroup_json(&a.owner),
        "vertices": a.vertices,
        "initial": a.initial,
        "terminal": terminal,
        "edges": edges,
    })
}

/// An initial or terminal subset: an explicit element list or an automaton
/// body over the owning semigroup.
fn parse_subset(v: &Value, owner: &Semigroup) -> Result<RationalSubset> {
    let obj = v.as_object().ok_or_else(|| anyhow!("subset must be an object"))?;
    if let Some(elems) = obj.get("elements") {
        let elems = elems
            .as_array()
            .ok_or_else(|| anyhow!("elements must be an array"))?
            .iter()
            .map(|e| parse_elem(e, owner))
            .collect::<Result<Vec<_>>>()?;
        return RationalSubset::from_elements(owner.clone(), elems).map_err(|e| anyhow!("{e:?}"));
    }
    Ok(RationalSubset::from_automaton(parse_s_automaton_body(
        obj, owner,
    )?))
}

fn subset_json(x: &RationalSubset) -> Value {
    if let Some(elems) = x.explicit() {
        let elems: Vec<Value> = elems.iter().map(|e| elem_json(e, x.owner())).collect();
        return json!({ "elements": elems });
    }
    let a = x.automaton().expect("automaton representation");
    let mut v = s_automaton_json(&a);
    v.as_object_mut().unwrap().remove("semigroup");
    v
}

fn parse_alphabet(v: &Value) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| anyhow!("alphabet must be an array of strings"))?
        .iter()
        .map(|s| {
            s.as_str()
                .map(str::to_string)
                .ok_or_else(|| anyhow!("alphabet symbols must be strings"))
        })
        .collect()
}

/// Splits a word over the alphabet: per character when every symbol is a
/// single character, otherwise on whitespace.
pub fn tokenize(word: &str, alphabet: &[String]) -> Result<Vec<usize>> {
    let lookup = |tok: &str| {
        alphabet
            .iter()
            .position(|s| s == tok)
            .ok_or_else(|| anyhow!("symbol {tok:?} is not in the alphabet"))
    };
    if word.is_empty() {
        return Ok(Vec::new());
    }
    if alphabet.iter().all(|s| s.chars().count() == 1) {
        word.chars().map(|c| lookup(&c.to_string())).collect()
    } else {
        word.split_whitespace().map(lookup).collect()
    }
}

pub fn parse_valence(v: &Value, dir: &Path) -> Result<ValenceAutomaton> {
    let obj = v.as_object().ok_or_else(|| anyhow!("valence automaton must be an object"))?;
    let owner = parse_semigroup_ref(field(obj, "semigroup")?, dir)?;
    let alphabet = parse_alphabet(field(obj, "alphabet")?)?;
    let vertices = as_usize(field(obj, "vertices")?, "vertices")?;
    let initial = as_usize(field(obj, "initial")?, "initial")?;
    let terminal = parse_terminal(field(obj, "terminal")?, vertices)?;
    let x0 = parse_subset(field(obj, "X0")?, &owner)?;
    let x1 = parse_subset(field(obj, "X1")?, &owner)?;

    let mut plain = Vec::new();
    let mut bare = Vec::new();
    for e in field(obj, "edges")?
        .as_array()
        .ok_or_else(|| anyhow!("edges must be an array"))?
    {
        let e = e.as_array().filter(|e| e.len() == 4).ok_or_else(|| {
            anyhow!("each edge must be [from, element, word, to]")
        })?;
        let from = as_usize(&e[0], "edge source")?;
        let to = as_usize(&e[3], "edge target")?;
        let word = tokenize(
            e[2].as_str().ok_or_else(|| anyhow!("edge word must be a string"))?,
            &alphabet,
        )?;
        if e[1].is_null() {
            // registerless edges only occur in machine output; they carry
            // words of at most one letter
            if word.len() > 1 {
                bail!("a null-register edge cannot carry a multi-letter word");
            }
            if from >= vertices || to >= vertices {
                bail!("edge endpoint out of range");
            }
            bare.push(VEdge {
                from,
                register: None,
                word: word.first().copied(),
                to,
            });
        } else {
            plain.push((from, parse_elem(&e[1], &owner)?, word, to));
        }
    }
    let mut machine = ValenceAutomaton::new(
        owner, alphabet, vertices, initial, terminal, plain, x0, x1,
    )
    .map_err(|e| anyhow!("{e:?}"))?;
    machine.edges.extend(bare);
    Ok(machine)
}

pub fn valence_json(v: &ValenceAutomaton) -> Value {
    let edges: Vec<Value> = v
        .edges
        .iter()
        .map(|e| {
            let reg = match &e.register {
                Some(r) => elem_json(r, &v.owner),
                None => Value::Null,
            };
            let word = match e.word {
                Some(s) => v.alphabet[s].clone(),
                None => String::new(),
            };
            json!([e.from, reg, word, e.to])
        })
        .collect();
    let terminal: Vec<usize> = (0..v.vertices).filter(|&q| v.terminal[q]).collect();
    json!({
        "semigroup": semigroup_json(&v.owner),
        "alphabet": v.alphabet,
        "vertices": v.vertices,
        "initial": v.initial,
        "terminal": terminal,
        "edges": edges,
        "X0": subset_json(&v.x0),
        "X1": subset_json(&v.x1),
    })
}

pub fn parse_nfa(v: &Value) -> Result<Nfa> {
    let obj = v.as_object().ok_or_else(|| anyhow!("automaton must be an object"))?;
    let alphabet = parse_alphabet(field(obj, "alphabet")?)?;
    let states = as_usize(field(obj, "states")?, "states")?;
    let initial = as_usize(field(obj, "initial")?, "initial")?;
    if initial >= states {
        bail!("initial state out of range");
    }
    let mut accepting = vec![false; states];
    for q in parse_terminal(field(obj, "accepting")?, states)? {
        accepting[q] = true;
    }
    let mut transitions = Vec::new();
    for t in field(obj, "transitions")?
        .as_array()
        .ok_or_else(|| anyhow!("transitions must be an array"))?
    {
        let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| {
            anyhow!("each transition must be [from, symbol or null, to]")
        })?;
        let from = as_usize(&t[0], "transition source")?;
        let to = as_usize(&t[2], "transition target")?;
        if from >= states || to >= states {
            bail!("transition endpoint out of range");
        }
        let sym = if t[1].is_null() {
            None
        } else {
            let s = t[1].as_str().ok_or_else(|| anyhow!("symbol must be a string or null"))?;
            Some(
                alphabet
                    .iter()
                    .position(|a| a == s)
                    .ok_or_else(|| anyhow!("symbol {s:?} is not in the alphabet"))?,
            )
        };
        transitions.push((from, sym, to));
    }
    Ok(Nfa {
        alphabet,
        states,
        initial,
        accepting,
        transitions,
    })
}

pub fn dfa_json(d: &Dfa) -> Value {
    let mut transitions = Vec::new();
    for q in 0..d.states {
        for (s, sym) in d.alphabet.iter().enumerate() {
            transitions.push(json!([q, sym, d.step(q, s)]));
        }
    }
    let accepting: Vec<usize> = (0..d.states).filter(|&q| d.accepting[q]).collect();
    json!({
        "alphabet": d.alphabet,
        "states": d.states,
        "initial": d.initial,
        "accepting": accepting,
        "transitions": transitions,
    })
}
