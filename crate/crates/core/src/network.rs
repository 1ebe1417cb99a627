//! Temporal networks: undirected graphs whose edges carry pairwise distinct
//! interaction times.
//!
//! Times are accepted as arbitrary finite reals and replaced by their ranks
//! `1..=m` on construction; nothing downstream compares floats.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count for which general (non-cycle) networks are searched
/// by factorial enumeration or checked by exhaustive path listing.
pub const GENERAL_SEARCH_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NetworkError {
    #[error("DuplicateTime: time {0} labels more than one edge")]
    DuplicateTime(f64),
    #[error("NonFiniteTime: edge {{{0}, {1}}} has a non-finite time")]
    NonFiniteTime(String, String),
    #[error("UnknownVertex: {0}")]
    UnknownVertex(String),
    #[error("DuplicateVertex: {0}")]
    DuplicateVertex(String),
    #[error("SelfLoop: {0}")]
    SelfLoop(String),
    #[error("DuplicateEdge: {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("SizeMismatch: {0} vertices vs {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("TooLarge: general isomorphism search is capped at {cap} vertices, got {got}")]
    TooLarge { got: usize, cap: usize },
    #[error("PathTooShort: a temporal path needs at least two vertices")]
    PathTooShort,
    #[error("NotACycle: {0}")]
    NotACycle(String),
    #[error("InvalidJson: {0}")]
    InvalidJson(String),
}

/// One edge of the JSON network format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawEdge {
    pub u: String,
    pub v: String,
    pub t: f64,
}

/// The JSON network format: `{"vertices": [...], "edges": [{"u", "v", "t"}]}`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RawNetwork {
    pub vertices: Vec<String>,
    pub edges: Vec<RawEdge>,
}

/// An undirected edge between two vertex indices, with its time rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Rank of the edge's time among all times of the network, starting at 1.
    pub rank: u32,
}

impl Edge {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

#[derive(Debug, Clone)]
pub struct TemporalNetwork {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    times: Vec<f64>,
    by_endpoints: HashMap<(usize, usize), usize>,
    incident: Vec<Vec<usize>>,
}

impl PartialEq for TemporalNetwork {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl TemporalNetwork {
    /// Validates a vertex list and a list of `(u, v, t)` edges.
    ///
    /// Vertex order is preserved. Edges keep their input order; their times
    /// are replaced by ranks.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, f64)]) -> Result<Self, NetworkError> {
        let mut index = HashMap::with_capacity(vertices.len());
        let mut names = Vec::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            let v = v.as_ref();
            if index.insert(v.to_string(), i).is_some() {
                return Err(NetworkError::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }

        let mut by_endpoints = HashMap::with_capacity(edges.len());
        let mut ends = Vec::with_capacity(edges.len());
        let mut times = Vec::with_capacity(edges.len());
        for (u, v, t) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let ui = *index
                .get(u)
                .ok_or_else(|| NetworkError::UnknownVertex(u.to_string()))?;
            let vi = *index
                .get(v)
                .ok_or_else(|| NetworkError::UnknownVertex(v.to_string()))?;
            if ui == vi {
                return Err(NetworkError::SelfLoop(u.to_string()));
            }
            if !t.is_finite() {
                return Err(NetworkError::NonFiniteTime(u.to_string(), v.to_string()));
            }
            if by_endpoints.insert(key(ui, vi), ends.len()).is_some() {
                return Err(NetworkError::DuplicateEdge(u.to_string(), v.to_string()));
            }
            ends.push((ui, vi));
            times.push(*t);
        }

        let mut order: Vec<usize> = (0..times.len()).collect();
        order.sort_by(|&a, &b| times[a].total_cmp(&times[b]));
        let mut ranks = vec![0u32; times.len()];
        for (r, w) in order.iter().enumerate() {
            if r > 0 && times[order[r - 1]] == times[*w] {
                return Err(NetworkError::DuplicateTime(times[*w]));
            }
            ranks[*w] = r as u32 + 1;
        }

        let mut incident = vec![Vec::new(); names.len()];
        let edges: Vec<Edge> = ends
            .iter()
            .zip(&ranks)
            .enumerate()
            .map(|(i, (&(u, v), &rank))| {
                incident[u].push(i);
                incident[v].push(i);
                Edge { u, v, rank }
            })
            .collect();

        Ok(Self {
            vertices: names,
            index,
            edges,
            times,
            by_endpoints,
            incident,
        })
    }

    pub fn from_raw(raw: &RawNetwork) -> Result<Self, NetworkError> {
        let edges: Vec<(&str, &str, f64)> = raw
            .edges
            .iter()
            .map(|e| (e.u.as_str(), e.v.as_str(), e.t))
            .collect();
        let vertices: Vec<&str> = raw.vertices.iter().map(String::as_str).collect();
        Self::new(&vertices, &edges)
    }

    pub fn from_json(text: &str) -> Result<Self, NetworkError> {
        let raw: RawNetwork =
            serde_json::from_str(text).map_err(|e| NetworkError::InvalidJson(e.to_string()))?;
        Self::from_raw(&raw)
    }

    /// Converts back to the JSON shape, with ranks in place of the original times.
    pub fn to_raw(&self) -> RawNetwork {
        RawNetwork {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| RawEdge {
                    u: self.vertices[e.u].clone(),
                    v: self.vertices[e.v].clone(),
                    t: f64::from(e.rank),
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Original input times, parallel to [`edges`](Self::edges).
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, NetworkError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| NetworkError::UnknownVertex(name.to_string()))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.incident[v].iter().map(move |&e| {
            let edge = &self.edges[e];
            (edge.other(v), edge.rank)
        })
    }

    pub fn edge_rank(&self, u: usize, v: usize) -> Option<u32> {
        self.by_endpoints
            .get(&key(u, v))
            .map(|&e| self.edges[e].rank)
    }

    /// True iff every consecutive pair is an edge and the edge ranks strictly
    /// increase along the sequence.
    pub fn is_temporal_walk(&self, seq: &[usize]) -> bool {
        let mut last = 0u32;
        for pair in seq.windows(2) {
            match self.edge_rank(pair[0], pair[1]) {
                Some(r) if r > last => last = r,
                _ => return false,
            }
        }
        true
    }

    pub fn is_temporal_path<S: AsRef<str>>(&self, seq: &[S]) -> Result<bool, NetworkError> {
        if seq.len() < 2 {
            return Err(NetworkError::PathTooShort);
        }
        let idx = seq
            .iter()
            .map(|s| self.vertex_index(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.is_temporal_walk(&idx))
    }

    /// Possession flags after replaying every interaction in time order,
    /// starting with only `source` holding the object.
    pub fn reachable_from(&self, source: usize) -> Vec<bool> {
        let mut holds = vec![false; self.vertices.len()];
        holds[source] = true;
        for edge in self.edges.iter().sorted_by_key(|e| e.rank) {
            if holds[edge.u] || holds[edge.v] {
                holds[edge.u] = true;
                holds[edge.v] = true;
            }
        }
        holds
    }

    /// The source together with every vertex reachable from it by a temporal path.
    pub fn temporal_reachable_set(&self, source: &str) -> Result<BTreeSet<String>, NetworkError> {
        let s = self.vertex_index(source)?;
        Ok(self
            .reachable_from(s)
            .into_iter()
            .enumerate()
            .filter(|&(_, held)| held)
            .map(|(v, _)| self.vertices[v].clone())
            .collect())
    }

    /// Calls `visit` on every temporal path with at least one edge until it
    /// returns `false`. Returns `false` iff the visit was cut short.
    pub fn for_each_temporal_path(&self, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
        fn extend(
            net: &TemporalNetwork,
            path: &mut Vec<usize>,
            last: u32,
            visit: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            let tail = *path.last().expect("nonempty path");
            for &e in &net.incident[tail] {
                let edge = net.edges[e];
                if edge.rank <= last {
                    continue;
                }
                path.push(edge.other(tail));
                let keep_going = visit(path) && extend(net, path, edge.rank, visit);
                path.pop();
                if !keep_going {
                    return false;
                }
            }
            true
        }
        let mut path = Vec::new();
        for start in 0..self.vertices.len() {
            path.clear();
            path.push(start);
            if !extend(self, &mut path, 0, &mut visit) {
                return false;
            }
        }
        true
    }

    /// Recognises the network as an n-gon and orders its cycle.
    pub fn as_ngon(&self) -> Result<NGon, NetworkError> {
        NGon::from_network(self.clone())
    }
}

/// A temporal n-gon, with its vertices listed in cycle order.
///
/// Edge `e_i` joins `cycle[i]` and `cycle[i + 1 mod n]`. The traversal starts at
/// the first declared vertex and heads toward its earlier-declared neighbour.
#[derive(Debug, Clone, PartialEq)]
pub struct NGon {
    net: TemporalNetwork,
    cycle: Vec<usize>,
    position: Vec<usize>,
    ranks: Vec<u32>,
}

impl NGon {
    pub fn from_network(net: TemporalNetwork) -> Result<Self, NetworkError> {
        let n = net.vertex_count();
        if n < 3 {
            return Err(NetworkError::NotACycle(format!(
                "{n} vertices, need at least 3"
            )));
        }
        if net.edges.len() != n {
            return Err(NetworkError::NotACycle(format!(
                "{} edges on {n} vertices",
                net.edges.len()
            )));
        }
        if let Some(v) = (0..n).find(|&v| net.degree(v) != 2) {
            return Err(NetworkError::NotACycle(format!(
                "vertex {} has degree {}",
                net.vertices[v],
                net.degree(v)
            )));
        }

        let mut cycle = Vec::with_capacity(n);
        let mut position = vec![usize::MAX; n];
        let (prev, mut cur) = (0, net.neighbours(0).map(|(w, _)| w).min().unwrap());
        cycle.push(0);
        position[0] = 0;
        let mut prev = prev;
        while cur != 0 {
            if position[cur] != usize::MAX {
                break;
            }
            position[cur] = cycle.len();
            cycle.push(cur);
            let next = net
                .neighbours(cur)
                .map(|(w, _)| w)
                .find(|&w| w != prev)
                .unwrap();
            prev = cur;
            cur = next;
        }
        if cycle.len() != n {
            return Err(NetworkError::NotACycle(format!(
                "the cycle through {} covers {} of {n} vertices",
                net.vertices[0],
                cycle.len()
            )));
        }
        let ranks = (0..n)
            .map(|i| net.edge_rank(cycle[i], cycle[(i + 1) % n]).unwrap())
            .collect();
        Ok(Self {
            net,
            cycle,
            position,
            ranks,
        })
    }

    /// An n-gon on vertices `v1..vn` whose edge `{v_i, v_(i+1)}` has time `times[i-1]`.
    pub fn from_times(times: &[f64]) -> Result<Self, NetworkError> {
        let n = times.len();
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String, f64)> = (0..n)
            .map(|i| (names[i].clone(), names[(i + 1) % n].clone(), times[i]))
            .collect();
        Self::from_network(TemporalNetwork::new(&names, &edges)?)
    }

    /// Same as [`from_times`](Self::from_times) for integer ranks.
    pub fn from_ranks(ranks: &[u32]) -> Result<Self, NetworkError> {
        let times: Vec<f64> = ranks.iter().map(|&r| f64::from(r)).collect();
        Self::from_times(&times)
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn network(&self) -> &TemporalNetwork {
        &self.net
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Edge ranks in cycle order.
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    fn rank_between(&self, u: usize, v: usize) -> Option<u32> {
        let n = self.len();
        let (pu, pv) = (self.position[u], self.position[v]);
        if (pu + 1) % n == pv {
            Some(self.ranks[pu])
        } else if (pv + 1) % n == pu {
            Some(self.ranks[pv])
        } else {
            None
        }
    }

    fn is_temporal_walk(&self, seq: impl Iterator<Item = usize>) -> bool {
        let mut last = 0;
        let mut prev = None;
        for v in seq {
            if let Some(u) = prev {
                match self.rank_between(u, v) {
                    Some(r) if r > last => last = r,
                    _ => return false,
                }
            }
            prev = Some(v);
        }
        true
    }

    /// The maximal runs of strictly increasing edge ranks along the cycle, in
    /// both directions, as vertex sequences. Every temporal path of the n-gon
    /// is a contiguous piece of one of these.
    pub fn maximal_runs(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let r = &self.ranks;
        let mut runs = Vec::new();
        for s in 0..n {
            // forward: e_s, e_(s+1), ...
            if r[(s + n - 1) % n] > r[s] {
                let mut run = vec![self.cycle[s]];
                let mut k = s;
                loop {
                    run.push(self.cycle[(k + 1) % n]);
                    if run.len() > n || r[(k + 1) % n] < r[k] {
                        break;
                    }
                    k = (k + 1) % n;
                }
                runs.push(run);
            }
            // backward: e_s, e_(s-1), ...
            if r[(s + 1) % n] > r[s] {
                let mut run = vec![self.cycle[(s + 1) % n]];
                let mut k = s;
                loop {
                    run.push(self.cycle[k]);
                    let below = (k + n - 1) % n;
                    if run.len() > n || r[below] < r[k] {
                        break;
                    }
                    k = below;
                }
                runs.push(run);
            }
        }
        runs
    }

    /// Temporal isomorphism test for a vertex map between two n-gons,
    /// checking only the maximal runs of `self`.
    pub fn is_temporal_isomorphism(&self, other: &NGon, map: &[usize]) -> bool {
        if self.len() != other.len() || !is_bijection(map, other.len()) {
            return false;
        }
        let n = self.len();
        let edges_kept = (0..n).all(|i| {
            other
                .rank_between(map[self.cycle[i]], map[self.cycle[(i + 1) % n]])
                .is_some()
        });
        edges_kept
            && self
                .maximal_runs()
                .iter()
                .all(|run| other.is_temporal_walk(run.iter().map(|&v| map[v])))
    }

    /// The 2n dihedral vertex maps onto `other`'s cycle, rotations first.
    pub fn dihedral_maps<'a>(&'a self, other: &'a NGon) -> impl Iterator<Item = Vec<usize>> + 'a {
        let n = self.len();
        (0..2 * n).map(move |g| {
            let mut map = vec![0; n];
            for i in 0..n {
                let j = if g < n {
                    (i + g) % n
                } else {
                    (g - n + n - i) % n
                };
                map[self.cycle[i]] = other.cycle[j];
            }
            map
        })
    }

    /// First temporal isomorphism among the dihedral maps, rotations by
    /// `0..n` then reflections by `0..n`.
    pub fn find_temporal_isomorphism(&self, other: &NGon) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        self.dihedral_maps(other)
            .find(|map| self.is_temporal_isomorphism(other, map))
    }
}

fn is_bijection(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    map.len() == n
        && map
            .iter()
            .all(|&w| w < n && !std::mem::replace(&mut seen[w], true))
}

/// Decides whether `map` (vertex index of `n` to vertex index of `m`) is a
/// temporal isomorphism: a bijection preserving edges and temporal paths.
///
/// Paths are checked through maximal runs when `n` is an n-gon, by listing
/// every temporal path when `n` has at most [`GENERAL_SEARCH_CAP`] vertices,
/// and otherwise through all two-edge temporal paths, which suffices because
/// a walk is temporal iff each of its two-edge pieces is.
pub fn is_temporal_isomorphism(
    n: &TemporalNetwork,
    m: &TemporalNetwork,
    map: &[usize],
) -> Result<bool, NetworkError> {
    if n.vertex_count() != m.vertex_count() {
        return Err(NetworkError::SizeMismatch(
            n.vertex_count(),
            m.vertex_count(),
        ));
    }
    if !is_bijection(map, m.vertex_count()) {
        return Ok(false);
    }
    if !n
        .edges
        .iter()
        .all(|e| m.edge_rank(map[e.u], map[e.v]).is_some())
    {
        return Ok(false);
    }
    let image_is_temporal = |p: &[usize]| {
        let image: Vec<usize> = p.iter().map(|&v| map[v]).collect();
        m.is_temporal_walk(&image)
    };
    if let Ok(gon) = n.as_ngon() {
        return Ok(gon.maximal_runs().iter().all(|r| image_is_temporal(r)));
    }
    if n.vertex_count() <= GENERAL_SEARCH_CAP {
        return Ok(n.for_each_temporal_path(image_is_temporal));
    }
    Ok(two_edge_paths(n).all(|p| image_is_temporal(&p)))
}

fn two_edge_paths(net: &TemporalNetwork) -> impl Iterator<Item = [usize; 3]> + '_ {
    (0..net.vertex_count()).flat_map(move |mid| {
        net.neighbours(mid)
            .cartesian_product(net.neighbours(mid).collect_vec())
            .filter(|((a, ra), (b, rb))| a != b && ra < rb)
            .map(move |((a, _), (b, _))| [a, mid, b])
    })
}

/// Searches for a temporal isomorphism from `n` to `m`.
///
/// Two n-gons are searched over the 2n dihedral maps in the order rotations
/// `0..n`, then reflections `0..n`. Other networks are searched over all
/// vertex permutations in lexicographic order, up to [`GENERAL_SEARCH_CAP`]
/// vertices.
pub fn find_temporal_isomorphism(
    n: &TemporalNetwork,
    m: &TemporalNetwork,
) -> Result<Option<Vec<usize>>, NetworkError> {
    if let (Ok(a), Ok(b)) = (n.as_ngon(), m.as_ngon()) {
        return Ok(a.find_temporal_isomorphism(&b));
    }
    let size = n.vertex_count().max(m.vertex_count());
    if size > GENERAL_SEARCH_CAP {
        return Err(NetworkError::TooLarge {
            got: size,
            cap: GENERAL_SEARCH_CAP,
        });
    }
    if n.vertex_count() != m.vertex_count() || n.edges.len() > m.edges.len() {
        return Ok(None);
    }
    for map in (0..size).permutations(size) {
        if is_temporal_isomorphism(n, m, &map)? {
            return Ok(Some(map));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn key_chain() -> TemporalNetwork {
        TemporalNetwork::new(
            &["A", "B", "C", "D", "E"],
            &[
                ("A", "D", 1.0),
                ("B", "C", 2.0),
                ("A", "E", 3.0),
                ("B", "D", 4.0),
                ("C", "E", 5.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validates_key_chain_as_five_gon() {
        let gon = key_chain().as_ngon().unwrap();
        assert_eq!(gon.len(), 5);
        let names: Vec<&str> = gon.cycle().iter().map(|&v| gon.network().name(v)).collect();
        assert_eq!(names, ["A", "D", "B", "C", "E"]);
        assert_eq!(gon.ranks(), &[1, 4, 2, 5, 3]);
    }

    #[test]
    fn single_edge_is_valid() {
        let net = TemporalNetwork::new(&["A", "B"], &[("A", "B", 1.0)]).unwrap();
        assert_eq!(net.edges().len(), 1);
        assert_eq!(net.edges()[0].rank, 1);
    }

    #[test]
    fn rejects_malformed_networks() {
        let dup = TemporalNetwork::new(&["A", "B", "C"], &[("A", "B", 2.0), ("B", "C", 2.0)]);
        assert_eq!(dup.unwrap_err(), NetworkError::DuplicateTime(2.0));
        let unknown = TemporalNetwork::new(&["A"], &[("A", "Z", 1.0)]);
        assert_eq!(
            unknown.unwrap_err(),
            NetworkError::UnknownVertex("Z".into())
        );
        let looped = TemporalNetwork::new(&["A"], &[("A", "A", 1.0)]);
        assert_eq!(looped.unwrap_err(), NetworkError::SelfLoop("A".into()));
        let twice = TemporalNetwork::new(&["A", "B"], &[("A", "B", 1.0), ("B", "A", 2.0)]);
        assert!(matches!(
            twice.unwrap_err(),
            NetworkError::DuplicateEdge(..)
        ));
        let nan = TemporalNetwork::new(&["A", "B"], &[("A", "B", f64::NAN)]);
        assert!(matches!(nan.unwrap_err(), NetworkError::NonFiniteTime(..)));
    }

    #[test]
    fn times_become_ranks() {
        let net = TemporalNetwork::new(
            &["a", "b", "c"],
            &[("a", "b", 10.5), ("b", "c", -3.0), ("c", "a", 7.25)],
        )
        .unwrap();
        let ranks: Vec<u32> = net.edges().iter().map(|e| e.rank).collect();
        assert_eq!(ranks, [3, 1, 2]);
    }

    #[test]
    fn temporal_paths_on_key_chain() {
        let net = key_chain();
        assert!(net.is_temporal_path(&["B", "C", "E"]).unwrap());
        assert!(net.is_temporal_path(&["A", "D", "B"]).unwrap());
        assert!(!net.is_temporal_path(&["E", "A", "D"]).unwrap());
        assert!(!net.is_temporal_path(&["A", "B"]).unwrap());
        assert_eq!(
            net.is_temporal_path(&["A", "Q"]).unwrap_err(),
            NetworkError::UnknownVertex("Q".into())
        );
        assert_eq!(
            net.is_temporal_path(&["A"]).unwrap_err(),
            NetworkError::PathTooShort
        );
    }

    #[test]
    fn reachability_on_key_chain() {
        let net = key_chain();
        let from_b: Vec<String> = net
            .temporal_reachable_set("B")
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(from_b, ["B", "C", "D", "E"]);
        // A hands over to D at 1 and E at 3; D reaches B at 4, E reaches C at 5.
        let from_a = net.temporal_reachable_set("A").unwrap();
        assert_eq!(from_a.len(), 5);
        assert!(net.temporal_reachable_set("X").is_err());
    }

    #[test]
    fn isolated_vertex_reaches_itself() {
        let net = TemporalNetwork::new::<&str>(&["v"], &[]).unwrap();
        let set: Vec<String> = net
            .temporal_reachable_set("v")
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(set, ["v"]);
    }

    #[test]
    fn runs_cover_a_whole_increasing_cycle() {
        let gon = NGon::from_ranks(&[1, 2, 3]).unwrap();
        let runs = gon.maximal_runs();
        assert!(runs.contains(&vec![0, 1, 2, 0]));
        // backward: e_0 then e_2, and e_1 alone
        assert!(runs.contains(&vec![1, 0, 2]));
        assert!(runs.contains(&vec![2, 1]));
        assert_eq!(runs.len(), 3);
    }

    #[test]
    fn three_gon_relabelled_is_not_isomorphic_under_identity() {
        let a = NGon::from_ranks(&[1, 2, 3]).unwrap();
        let b = NGon::from_ranks(&[1, 3, 2]).unwrap();
        assert!(!is_temporal_isomorphism(a.network(), b.network(), &[0, 1, 2]).unwrap());
        assert!(!a.is_temporal_isomorphism(&b, &[0, 1, 2]));
    }

    #[test]
    fn four_gons_with_different_forms_are_not_isomorphic() {
        let a = NGon::from_ranks(&[1, 2, 3, 4]).unwrap();
        let b = NGon::from_ranks(&[1, 2, 4, 3]).unwrap();
        assert_eq!(
            find_temporal_isomorphism(a.network(), b.network()).unwrap(),
            None
        );
    }

    #[test]
    fn identity_found_first() {
        let net = key_chain();
        let map = find_temporal_isomorphism(&net, &net).unwrap().unwrap();
        assert_eq!(map, [0, 1, 2, 3, 4]);
        let star = TemporalNetwork::new(
            &["c", "x", "y", "z"],
            &[("c", "x", 1.0), ("c", "y", 2.0), ("c", "z", 3.0)],
        )
        .unwrap();
        assert_eq!(
            find_temporal_isomorphism(&star, &star).unwrap().unwrap(),
            [0, 1, 2, 3]
        );
    }

    #[test]
    fn size_mismatch_and_cap() {
        let a = key_chain();
        let b = TemporalNetwork::new(&["A", "B"], &[("A", "B", 1.0)]).unwrap();
        assert_eq!(
            is_temporal_isomorphism(&a, &b, &[0, 1]).unwrap_err(),
            NetworkError::SizeMismatch(5, 2)
        );
        let names: Vec<String> = (0..9).map(|i| format!("p{i}")).collect();
        let path: Vec<(String, String, f64)> = (0..8)
            .map(|i| (names[i].clone(), names[i + 1].clone(), i as f64))
            .collect();
        let long = TemporalNetwork::new(&names, &path).unwrap();
        assert_eq!(
            find_temporal_isomorphism(&long, &long).unwrap_err(),
            NetworkError::TooLarge { got: 9, cap: 8 }
        );
    }

    #[test]
    fn non_bijective_maps_are_rejected() {
        let net = key_chain();
        assert!(!is_temporal_isomorphism(&net, &net, &[0, 0, 2, 3, 4]).unwrap());
        assert!(!is_temporal_isomorphism(&net, &net, &[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":["A","B","C"],"edges":[{"u":"A","v":"B","t":0.5},{"u":"B","v":"C","t":0.25}]}"#;
        let net = TemporalNetwork::from_json(text).unwrap();
        assert_eq!(net.edges()[0].rank, 2);
        let again = TemporalNetwork::from_raw(&net.to_raw()).unwrap();
        assert_eq!(again, net);
        assert!(matches!(
            TemporalNetwork::from_json("{").unwrap_err(),
            NetworkError::InvalidJson(_)
        ));
    }
}
