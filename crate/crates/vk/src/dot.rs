//! DOT export for the automaton flavours.

use vk_core::{Dfa, SAutomaton, ValenceAutomaton};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn header(out: &mut String, vertices: usize, initial: usize, terminal: impl Fn(usize) -> bool) {
    out.push_str("digraph {\n  rankdir=LR;\n  start [shape=point];\n");
    for q in 0..vertices {
        let shape = if terminal(q) { "doublecircle" } else { "circle" };
        out.push_str(&format!("  q{q} [shape={shape}];\n"));
    }
    out.push_str(&format!("  start -> q{initial};\n"));
}

pub fn s_automaton_dot(a: &SAutomaton) -> String {
    let mut out = String::new();
    header(&mut out, a.vertices, a.initial, |q| a.terminal[q]);
    for e in &a.edges {
        let label = escape(&a.owner.display(&e.label));
        out.push_str(&format!("  q{} -> q{} [label=\"{label}\"];\n", e.from, e.to));
    }
    out.push_str("}\n");
    out
}

pub fn valence_dot(v: &ValenceAutomaton) -> String {
    let mut out = String::new();
    header(&mut out, v.vertices, v.initial, |q| v.terminal[q]);
    for e in &v.edges {
        let reg = match &e.register {
            Some(r) => v.owner.display(r),
            None => "-".to_string(),
        };
        let word = match e.word {
            Some(s) => v.alphabet[s].as_str(),
            None => "\u{03b5}",
        };
        let label = escape(&format!("{word} | {reg}"));
        out.push_str(&format!("  q{} -> q{} [label=\"{label}\"];\n", e.from, e.to));
    }
    out.push_str("}\n");
    out
}

pub fn dfa_dot(d: &Dfa) -> String {
    let mut out = String::new();
    header(&mut out, d.states, d.initial, |q| d.accepting[q]);
    for q in 0..d.states {
        for (s, sym) in d.alphabet.iter().enumerate() {
            let label = escape(sym);
            out.push_str(&format!("  q{q} -> q{} [label=\"{label}\"];\n", d.step(q, s)));
        }
    }
    out.push_str("}\n");
    out
}
