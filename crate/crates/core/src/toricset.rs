//! The projective toric subset X parameterized by a graph.
//!
//! X is the image of `(F*)^n -> P^{s-1}`, `x ↦ (e_1(x) : ... : e_s(x))` with
//! `e_k(x) = x_i x_j` for edge `k = {i, j}`. Every coordinate is a unit, so a
//! point is stored with its first coordinate scaled to 1.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::gfq::{Elem, FiniteField};
use crate::graph::Graph;
use crate::{check_budget, checked_pow, Error, Result};

/// A point of the torus T^{s-1}, normalized so its first coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint(Vec<Elem>);

impl ProjectivePoint {
    /// Normalizes a vector of units. Fails on a zero coordinate or an empty vector.
    pub fn normalize(field: &FiniteField, coords: &[Elem]) -> Result<Self> {
        let first = *coords.first().ok_or(Error::NoEdges)?;
        let scale = field.inv(first)?;
        let mut out = Vec::with_capacity(coords.len());
        for &c in coords {
            if c.is_zero() {
                return Err(Error::ZeroInverse);
            }
            out.push(field.mul(c, scale));
        }
        Ok(ProjectivePoint(out))
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct ToricSet {
    graph: Graph,
    field: FiniteField,
    points: Vec<ProjectivePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthCheck {
    pub expected: BigUint,
    pub enumerated: usize,
    pub matches: bool,
}

impl ToricSet {
    /// Enumerates X over `(F*)^{n'}`, n' the number of non-isolated vertices.
    pub fn enumerate(graph: &Graph, field: &FiniteField, budget: u64) -> Result<Self> {
        Ok(Self::enumerate_with_fibers(graph, field, budget)?.0)
    }

    /// Like [`ToricSet::enumerate`], also returning how many unit tuples hit each point.
    pub fn enumerate_with_fibers(
        graph: &Graph,
        field: &FiniteField,
        budget: u64,
    ) -> Result<(Self, Vec<u64>)> {
        field.require_nontrivial()?;
        if graph.edge_count() == 0 {
            return Err(Error::NoEdges);
        }
        let covered = graph.covered_vertices();
        let units = field.unit_order() as u128;
        check_budget(checked_pow(units, covered.len() as u32), budget)?;

        let mut slot = vec![usize::MAX; graph.vertex_count() + 1];
        for (i, &v) in covered.iter().enumerate() {
            slot[v] = i;
        }
        let edges: Vec<(usize, usize)> =
            graph.edges().iter().map(|&(a, b)| (slot[a], slot[b])).collect();

        // Unit tuples as discrete logs, advanced like an odometer.
        let order = field.unit_order() as u64;
        let mut logs = vec![0u64; covered.len()];
        let mut buf = vec![Elem::ZERO; edges.len()];
        let mut hits: BTreeMap<Vec<Elem>, u64> = BTreeMap::new();
        loop {
            let base = logs[edges[0].0] + logs[edges[0].1];
            for (k, &(i, j)) in edges.iter().enumerate() {
                buf[k] = field.exp(logs[i] + logs[j] + 2 * order - base);
            }
            match hits.get_mut(&buf[..]) {
                Some(c) => *c += 1,
                None => {
                    hits.insert(buf.clone(), 1);
                }
            }
            let mut d = 0;
            while d < logs.len() {
                logs[d] += 1;
                if logs[d] < order {
                    break;
                }
                logs[d] = 0;
                d += 1;
            }
            if d == logs.len() {
                break;
            }
        }
        let (points, fibers) = hits.into_iter().map(|(p, c)| (ProjectivePoint(p), c)).unzip();
        Ok((ToricSet { graph: graph.clone(), field: field.clone(), points }, fibers))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    /// m = |X|.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// s, the dimension of the ambient affine space.
    pub fn ambient_dim(&self) -> usize {
        self.graph.edge_count()
    }
}

/// The closed-form |X| from the component profile, reading the formula's
/// component count as b₀(G):
///
/// - γ ≥ 1, q odd: (q-1)^{n-b₀+γ-1} / 2^{γ-1}
/// - γ ≥ 1, q even: (q-1)^{n-b₀+γ-1}
/// - γ = 0: (q-1)^{n-b₀-1}
pub fn expected_length(graph: &Graph, field: &FiniteField) -> Result<BigUint> {
    if graph.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let profile = graph.component_profile();
    let n = graph.vertex_count();
    let b0 = profile.component_count();
    let gamma = profile.non_bipartite_count();
    let base = BigUint::from(field.unit_order());
    if gamma == 0 {
        // At least one component has an edge, so n - b₀ >= 1.
        return Ok(Pow::pow(&base, (n - b0 - 1) as u32));
    }
    let value: BigUint = Pow::pow(&base, (n - b0 + gamma - 1) as u32);
    if field.order() % 2 == 0 {
        return Ok(value);
    }
    let divisor: BigUint = BigUint::one() << (gamma - 1);
    if &value % &divisor != BigUint::ZERO {
        return Err(Error::InexactDivision("expected_length"));
    }
    Ok(value / divisor)
}

/// Runs both the closed form and the enumeration.
pub fn verify_length(graph: &Graph, field: &FiniteField, budget: u64) -> Result<LengthCheck> {
    let expected = expected_length(graph, field)?;
    let enumerated = ToricSet::enumerate(graph, field, budget)?.len();
    let matches = expected == BigUint::from(enumerated);
    Ok(LengthCheck { expected, enumerated, matches })
}
