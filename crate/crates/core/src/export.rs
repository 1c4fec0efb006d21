//! Machine-readable output: the JSON envelope and the commutation graph.
//!
//! Every JSON document is `{"data": [...], "kind": ..., "n": N}`. Documents are
//! rendered through `serde_json::Value`, whose maps keep keys sorted, so parsing a
//! document and printing it again reproduces it byte for byte. No floats appear.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{check_qubits, Subspace};
use crate::pauli::{mcs_of_generator, operators, PauliOperator};
use crate::polar::Spread;
use crate::report::{Check, VerificationReport};

/// The commutation graph is exported densely; capped at 63 vertices.
pub const MAX_GRAPH_QUBITS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Generators,
    Spreads,
    Report,
    Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T> {
    pub n: usize,
    pub kind: Kind,
    pub data: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(n: usize, kind: Kind, data: T) -> Self {
        Self { n, kind, data }
    }

    /// Canonical JSON: sorted keys, compact separators.
    pub fn to_json(&self) -> String {
        canonical_json(self)
    }
}

pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("documents contain only strings, integers and booleans");
    value.to_string()
}

/// Re-serializes a JSON document canonically.
pub fn recanonicalize(document: &str) -> serde_json::Result<String> {
    let value: serde_json::Value = serde_json::from_str(document)?;
    Ok(value.to_string())
}

/// An MCS as its operator words, in canonical point order.
pub fn mcs_words(g: &Subspace) -> Result<Vec<String>> {
    Ok(mcs_of_generator(g)?.iter().map(PauliOperator::to_string).collect())
}

pub fn generators_document(n: usize, generators: &[Subspace]) -> Result<Envelope<Vec<Vec<String>>>> {
    let data = generators.iter().map(mcs_words).collect::<Result<_>>()?;
    Ok(Envelope::new(n, Kind::Generators, data))
}

pub fn spreads_document(n: usize, spreads: &[Spread]) -> Result<Envelope<Vec<Vec<Vec<String>>>>> {
    let data = spreads
        .iter()
        .map(|s| s.blocks().iter().map(mcs_words).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok(Envelope::new(n, Kind::Spreads, data))
}

pub fn report_document(report: &VerificationReport) -> Envelope<Vec<Check>> {
    Envelope::new(report.n_qubits, Kind::Report, report.checks.clone())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphVertex {
    pub vertex: String,
    pub neighbors: Vec<String>,
}

/// Vertices are the non-identity operators; edges join distinct commuting
/// (perpendicular) pairs.
#[derive(Debug, Clone)]
pub struct CommutationGraph {
    n: usize,
    vertices: Vec<PauliOperator>,
    adjacency: Vec<Vec<usize>>,
}

impl CommutationGraph {
    pub fn new(n: usize) -> Result<Self> {
        check_qubits(n)?;
        if n > MAX_GRAPH_QUBITS {
            return Err(Error::Capacity {
                operation: "commutation graph export",
                n,
                cap: MAX_GRAPH_QUBITS,
                predicted: format!("{} vertices", (1u64 << (2 * n)) - 1),
            });
        }
        let mut vertices: Vec<PauliOperator> = operators(n)?.collect();
        vertices.sort();
        let adjacency = vertices
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let u = p.raw_vector();
                (0..vertices.len())
                    .filter(|&j| j != i && u.is_orthogonal(&vertices[j].raw_vector()))
                    .collect()
            })
            .collect();
        Ok(Self { n, vertices, adjacency })
    }

    pub fn vertices(&self) -> &[PauliOperator] {
        &self.vertices
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (&PauliOperator, &PauliOperator)> + '_ {
        self.adjacency.iter().enumerate().flat_map(move |(i, nbrs)| {
            nbrs.iter()
                .filter(move |&&j| j > i)
                .map(move |&j| (&self.vertices[i], &self.vertices[j]))
        })
    }

    pub fn document(&self) -> Envelope<Vec<GraphVertex>> {
        let data = self
            .vertices
            .iter()
            .zip(&self.adjacency)
            .map(|(v, nbrs)| GraphVertex {
                vertex: v.to_string(),
                neighbors: nbrs.iter().map(|&j| self.vertices[j].to_string()).collect(),
            })
            .collect();
        Envelope::new(self.n, Kind::Graph, data)
    }

    /// Graphviz DOT, vertices first, then one line per edge.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph W{}_2 {{\n", 2 * self.n - 1);
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        }
        out.push_str("}\n");
        out
    }
}
