//! The 2-modular graph picture of `f`.
//!
//! An odd part `2k+1` is drawn as a row of `k` twos followed by a one. Running
//! `f` on a Schur partition grows such a graph column by column: each step
//! applies `φ` and appends a column whose length is `m` of the state before
//! the step, with the bottom `g` entries set to 1. Rows that received a 1 are
//! finished; the remaining top rows stay open and hold an even sum.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::{grouping, schur_reduce};
use crate::partition::Partition;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoModularGraph {
    /// Top row first; the top row is the largest part.
    pub rows: Vec<Vec<u8>>,
}

fn invalid(reason: impl Into<String>) -> Error {
    Error::InvalidGraph(reason.into())
}

impl TwoModularGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&e| e as u32).sum())
            .collect()
    }

    /// Number of leading rows without a trailing 1.
    pub fn open_rows(&self) -> usize {
        self.rows
            .iter()
            .take_while(|r| r.last() != Some(&1))
            .count()
    }

    /// Rows are nonempty runs of 2s with at most one trailing 1, every
    /// finished row sits below every open row, and sums weakly decrease.
    pub fn check_shape(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(invalid(format!("row {i} is empty")));
            }
            let (body, last) = row.split_at(row.len() - 1);
            if body.iter().any(|&e| e != 2) || !matches!(last[0], 1 | 2) {
                return Err(invalid(format!(
                    "row {i} is not 2s followed by an optional 1"
                )));
            }
        }
        let open = self.open_rows();
        if self.rows[open..].iter().any(|r| r.last() != Some(&1)) {
            return Err(invalid("an open row lies below a finished row"));
        }
        let sums = self.row_sums();
        if sums.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!(
                "row sums {sums:?} are not weakly decreasing"
            )));
        }
        Ok(())
    }

    /// A complete graph: valid shape, every row finished, and the row sums
    /// form an Alladi partition.
    pub fn check_final(&self) -> Result<()> {
        self.check_shape()?;
        if self.open_rows() != 0 {
            return Err(invalid("a row has an even sum"));
        }
        let sums = self.row_sums();
        if sums.windows(3).any(|w| w[0] == w[2]) {
            return Err(invalid(format!(
                "row sums {sums:?} repeat a part three times"
            )));
        }
        Ok(())
    }

    fn append_column(&mut self, length: usize, ones: usize) {
        while self.rows.len() < length {
            self.rows.push(Vec::new());
        }
        for (i, row) in self.rows.iter_mut().take(length).enumerate() {
            row.push(if i + ones >= length { 1 } else { 2 });
        }
    }

    /// Adds `other` row-wise into the top rows.
    fn add_rows(&mut self, other: &TwoModularGraph) {
        for (row, extra) in self.rows.iter_mut().zip(&other.rows) {
            row.extend_from_slice(extra);
        }
    }

    /// Drops the first entry of every row and discards rows left empty.
    pub fn without_leftmost_column(&self) -> TwoModularGraph {
        TwoModularGraph {
            rows: self
                .rows
                .iter()
                .filter(|r| r.len() > 1)
                .map(|r| r[1..].to_vec())
                .collect(),
        }
    }

    pub fn render_ascii(&self) -> String {
        if self.rows.is_empty() {
            return "empty".to_string();
        }
        self.rows
            .iter()
            .map(|r| r.iter().map(u8::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for TwoModularGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

pub fn to_two_modular(a: &Partition) -> Result<TwoModularGraph> {
    if !a.is_alladi() {
        return Err(Error::NotInClass {
            class: "C",
            partition: a.clone(),
        });
    }
    let rows = a
        .parts()
        .iter()
        .rev()
        .map(|&x| {
            let mut row = vec![2u8; (x / 2) as usize];
            row.push(1);
            row
        })
        .collect();
    Ok(TwoModularGraph { rows })
}

pub fn from_two_modular(g: &TwoModularGraph) -> Result<Partition> {
    g.check_final()?;
    Partition::new(g.row_sums())
}

/// Same as [`from_two_modular`] for graphs whose rows may be unsorted:
/// re-sorts the sums instead of rejecting.
pub fn row_sums_partition(g: &TwoModularGraph) -> Result<Partition> {
    Partition::new(g.row_sums())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    Start,
    Column,
    /// The state was already in `D ∩ C` and its rows were added on top.
    Merge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub schur_state: Partition,
    pub graph: TwoModularGraph,
    /// `g` of the previous state (0 for start and merge steps).
    pub g_used: u8,
    /// Length of the column appended in this step (0 for start and merge).
    pub column_length: u32,
}

impl TraceStep {
    pub fn render(&self) -> String {
        let head = match self.kind {
            StepKind::Start => format!("start {}", self.schur_state),
            StepKind::Column => format!(
                "column length={} g={} -> {}",
                self.column_length, self.g_used, self.schur_state
            ),
            StepKind::Merge => "merge".to_string(),
        };
        format!("{head}\n{}", self.graph.render_ascii())
    }
}

/// The sequence of states and graphs for `f(p)`. With `early_stop`, the run
/// finishes as soon as the state is in `D ∩ C` by merging that state's rows
/// into the open rows; otherwise it runs until the state is empty.
pub fn f_trace(p: &Partition, early_stop: bool) -> Result<Vec<TraceStep>> {
    if !p.is_schur() {
        return Err(Error::NotInClass {
            class: "D",
            partition: p.clone(),
        });
    }
    let mut steps = vec![TraceStep {
        kind: StepKind::Start,
        schur_state: p.clone(),
        graph: TwoModularGraph::empty(),
        g_used: 0,
        column_length: 0,
    }];
    let mut state = p.clone();
    let mut graph = TwoModularGraph::empty();
    while !state.is_empty() {
        if early_stop && state.is_alladi() {
            let open = graph.open_rows();
            if !graph.rows.is_empty() && open != state.len() {
                return Err(invalid(format!(
                    "{open} open rows cannot take the {} parts of {state}",
                    state.len()
                )));
            }
            let rows = to_two_modular(&state)?;
            if graph.rows.is_empty() {
                graph = rows;
            } else {
                graph.add_rows(&rows);
            }
            graph.check_final()?;
            steps.push(TraceStep {
                kind: StepKind::Merge,
                schur_state: Partition::empty(),
                graph: graph.clone(),
                g_used: 0,
                column_length: 0,
            });
            return Ok(steps);
        }
        let length = state.m_statistic();
        let grouped = grouping(&state)?;
        if !graph.rows.is_empty() && graph.open_rows() != length as usize {
            return Err(invalid(format!(
                "column of length {length} does not fit {} open rows",
                graph.open_rows()
            )));
        }
        graph.append_column(length as usize, grouped.g as usize);
        graph.check_shape()?;
        state = schur_reduce(&grouped.image)?;
        steps.push(TraceStep {
            kind: StepKind::Column,
            schur_state: state.clone(),
            graph: graph.clone(),
            g_used: grouped.g,
            column_length: length,
        });
    }
    graph.check_final()?;
    Ok(steps)
}

/// The Alladi partition read off the last graph of a trace.
pub fn trace_result(steps: &[TraceStep]) -> Result<Partition> {
    let last = steps.last().ok_or_else(|| invalid("empty trace"))?;
    from_two_modular(&last.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::f;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn row_encoding() {
        let g = to_two_modular(&p("3+5+7+7+11+17")).unwrap();
        let lens: Vec<usize> = g.rows.iter().map(Vec::len).collect();
        assert_eq!(lens, vec![9, 6, 4, 4, 3, 2]);
        assert!(g.rows.iter().all(|r| r.last() == Some(&1)));
        assert_eq!(from_two_modular(&g).unwrap(), p("3+5+7+7+11+17"));
        assert_eq!(
            to_two_modular(&Partition::empty()).unwrap(),
            TwoModularGraph::empty()
        );
        assert_eq!(to_two_modular(&p("1")).unwrap().rows, vec![vec![1]]);
        assert_eq!(to_two_modular(&p("3")).unwrap().render_ascii(), "2 1");
        assert_eq!(TwoModularGraph::empty().render_ascii(), "empty");
    }

    #[test]
    fn invalid_graphs() {
        let even = TwoModularGraph {
            rows: vec![vec![2, 2]],
        };
        assert!(from_two_modular(&even).is_err());
        let unsorted = TwoModularGraph {
            rows: vec![vec![1], vec![2, 1]],
        };
        assert!(from_two_modular(&unsorted).is_err());
        let one_first = TwoModularGraph {
            rows: vec![vec![1, 2]],
        };
        assert!(from_two_modular(&one_first).is_err());
        let triple = TwoModularGraph {
            rows: vec![vec![1]; 3],
        };
        assert!(from_two_modular(&triple).is_err());
    }

    #[test]
    fn worked_trace() {
        let steps = f_trace(&p("7+11+14+18"), true).unwrap();
        let states: Vec<String> = steps.iter().map(|s| s.schur_state.to_string()).collect();
        assert_eq!(
            states,
            ["7+11+14+18", "4+8+11+15", "1+5+8+13", "2+5+11", "3+9", "0"]
        );
        let gs: Vec<u8> = steps[1..5].iter().map(|s| s.g_used).collect();
        assert_eq!(gs, [0, 1, 1, 2]);
        let lens: Vec<u32> = steps[1..5].iter().map(|s| s.column_length).collect();
        assert_eq!(lens, [6, 6, 5, 4]);
        assert_eq!(
            steps[2].graph.render_ascii(),
            "2 2\n2 2\n2 2\n2 2\n2 2\n2 1"
        );
        assert_eq!(steps.last().unwrap().kind, StepKind::Merge);
        assert_eq!(trace_result(&steps).unwrap(), p("3+5+7+7+11+17"));
        let full = f_trace(&p("7+11+14+18"), false).unwrap();
        assert_eq!(trace_result(&full).unwrap(), p("3+5+7+7+11+17"));
    }

    #[test]
    fn immediate_stop() {
        let steps = f_trace(&p("3+9"), true).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[1].graph, to_two_modular(&p("3+9")).unwrap());
        assert_eq!(f_trace(&Partition::empty(), true).unwrap().len(), 1);
    }

    #[test]
    fn trace_matches_f() {
        assert_eq!(
            trace_result(&f_trace(&p("3+7+14"), true).unwrap()).unwrap(),
            p("3+5+5+11")
        );
        for x in ["1", "2", "1+4", "5+10+14", "2+5+11", "1+5+8+13"] {
            let q = p(x);
            for early in [true, false] {
                assert_eq!(
                    trace_result(&f_trace(&q, early).unwrap()).unwrap(),
                    f(&q).unwrap(),
                    "{x}"
                );
            }
        }
    }
}
