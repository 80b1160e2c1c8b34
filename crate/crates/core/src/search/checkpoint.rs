//! Resume files: which subtree tasks finished and what they found.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletedTask {
    pub task: usize,
    pub solutions: Vec<Vec<VertexSet>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub fingerprint: String,
    pub total_tasks: usize,
    pub completed: Vec<CompletedTask>,
}

impl Checkpoint {
    pub fn new(fingerprint: String, total_tasks: usize) -> Self {
        Checkpoint {
            fingerprint,
            total_tasks,
            completed: Vec::new(),
        }
    }

    pub fn record(&mut self, task: usize, solutions: &[Vec<VertexSet>]) {
        self.completed.push(CompletedTask {
            task,
            solutions: solutions.to_vec(),
        });
    }

    pub fn load(path: &Path) -> Result<Self, SearchError> {
        let text = fs::read_to_string(path).map_err(|e| SearchError::Checkpoint(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| SearchError::Checkpoint(format!("{}: {e}", path.display())))
    }

    /// Writes to a sibling temporary file, then renames over `path`.
    pub fn save(&self, path: &Path) -> Result<(), SearchError> {
        let mut sorted = self.clone();
        sorted.completed.sort_by_key(|c| c.task);
        let tmp = path.with_extension("tmp");
        let text = serde_json::to_string(&sorted).expect("plain data");
        fs::write(&tmp, text).map_err(|e| SearchError::Checkpoint(e.to_string()))?;
        fs::rename(&tmp, path).map_err(|e| SearchError::Checkpoint(e.to_string()))
    }
}
