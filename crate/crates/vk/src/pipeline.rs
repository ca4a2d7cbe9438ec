//! Conversion pipelines over valence automata, with optional equivalence
//! certificates for finite register semigroups.

use anyhow::{anyhow, bail, Result};
use serde_json::{json, Value};
use vk_core::{enumerate, equivalent, Equivalence, ValenceAutomaton};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    ZeroSimple,
    Nozero,
    NormalizeInitial,
    EliminateTarget,
    ToGroup,
}

impl Step {
    pub fn parse(name: &str) -> Result<Step> {
        Ok(match name {
            "zero-simple" => Step::ZeroSimple,
            "nozero" => Step::Nozero,
            "normalize-initial" => Step::NormalizeInitial,
            "eliminate-target" => Step::EliminateTarget,
            "to-group" => Step::ToGroup,
            _ => bail!(
                "unknown pipeline step {name:?} (expected zero-simple, nozero, \
                 normalize-initial, eliminate-target or to-group)"
            ),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Step::ZeroSimple => "zero-simple",
            Step::Nozero => "nozero",
            Step::NormalizeInitial => "normalize-initial",
            Step::EliminateTarget => "eliminate-target",
            Step::ToGroup => "to-group",
        }
    }

    fn apply(&self, v: &ValenceAutomaton) -> vk_core::Result<ValenceAutomaton> {
        match self {
            Step::ZeroSimple => v.zero_simple_reduction(),
            Step::Nozero => v.nozero_normalize(),
            Step::NormalizeInitial => v.normalize_initial(),
            Step::EliminateTarget => v.eliminate_target_set(),
            Step::ToGroup => v.to_group_automaton(),
        }
    }
}

/// An ordered list of transformation steps, parsed from a comma-separated
/// name list.
pub struct PipelineSpec(pub Vec<Step>);

impl PipelineSpec {
    pub fn parse(spec: &str) -> Result<PipelineSpec> {
        let steps = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Step::parse)
            .collect::<Result<Vec<_>>>()?;
        if steps.is_empty() {
            bail!("empty pipeline");
        }
        Ok(PipelineSpec(steps))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.0.iter().map(Step::name).collect()
    }

    /// Runs the steps in order; a failing precondition is reported with its
    /// step index.
    pub fn run(&self, input: &ValenceAutomaton) -> Result<ValenceAutomaton> {
        let mut cur = input.clone();
        for (k, step) in self.0.iter().enumerate() {
            cur = step
                .apply(&cur)
                .map_err(|e| anyhow!("step {} ({}): {e:?}", k + 1, step.name()))?;
        }
        Ok(cur)
    }
}

/// Language-equivalence certificate for a conversion, as a JSON document.
/// The verdict comes from minimal-DFA comparison and is cross-checked
/// against word enumeration to length 8.
pub fn certify(
    input: &ValenceAutomaton,
    output: &ValenceAutomaton,
    pipeline: &PipelineSpec,
    source: &str,
) -> Result<Value> {
    let before = input.language_dfa().map_err(|e| anyhow!("{e:?}"))?;
    let after = output.language_dfa().map_err(|e| anyhow!("{e:?}"))?;
    let verdict = equivalent(&before, &after).map_err(|e| anyhow!("{e:?}"))?;
    let words_agree = enumerate(&before, 8) == enumerate(&after, 8);
    let (verdict_str, counterexample) = match &verdict {
        Equivalence::Equivalent if words_agree => ("equivalent", None),
        Equivalence::Equivalent => ("inconsistent", None),
        Equivalence::Counterexample(w) => ("inequivalent", Some(w.clone())),
    };
    Ok(json!({
        "input": source,
        "pipeline": pipeline.names(),
        "verdict": verdict_str,
        "counterexample": counterexample,
        "dfa_states_before": before.states,
        "dfa_states_after": after.states,
    }))
}
