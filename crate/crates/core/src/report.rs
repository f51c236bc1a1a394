//! Axiom verdicts with concrete witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::subset::{ElementId, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AxiomId {
    IB,
    IH,
    SIS,
    IW,
    IE,
    O1,
    O2,
    O3,
    SYM,
    SUBMOD,
    L1a,
    L1b,
    PRE,
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Verdict for one axiom. A failing report carries the sets (and element,
/// where the clause quantifies over one) at which the clause is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub holds: bool,
    pub witnesses: Vec<Subset>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<ElementId>,
    pub note: String,
}

impl AxiomReport {
    pub fn pass(axiom: AxiomId) -> Self {
        AxiomReport {
            axiom,
            holds: true,
            witnesses: Vec::new(),
            element: None,
            note: String::new(),
        }
    }

    pub fn fail(axiom: AxiomId, witnesses: Vec<Subset>, element: Option<ElementId>, note: String) -> Self {
        debug_assert!(!witnesses.is_empty());
        AxiomReport {
            axiom,
            holds: false,
            witnesses,
            element,
            note,
        }
    }

    pub fn witness(&self, i: usize) -> Option<Subset> {
        self.witnesses.get(i).copied()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds {
            return write!(f, "{}: holds", self.axiom);
        }
        write!(f, "{}: fails at", self.axiom)?;
        for w in &self.witnesses {
            write!(f, " {w}")?;
        }
        if let Some(e) = self.element {
            write!(f, " e={e}")?;
        }
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}
