use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::uf::UnionFind;

/// Half-edge label. Each label names one edge of the 4-valent graph and
/// occurs at exactly two crossing positions.
pub type Label = u32;

/// A position at a crossing: `(crossing index, slot 0..4)`.
pub type Dart = (usize, usize);

/// Which pair of opposite slots carries the over-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Over {
    /// Slots 0 and 2.
    Even,
    /// Slots 1 and 3.
    Odd,
}

impl Over {
    pub fn from_slots(slots: [usize; 2]) -> Option<Self> {
        let mut s = slots;
        s.sort_unstable();
        match s {
            [0, 2] => Some(Over::Even),
            [1, 3] => Some(Over::Odd),
            _ => None,
        }
    }

    pub fn slots(self) -> [usize; 2] {
        match self {
            Over::Even => [0, 2],
            Over::Odd => [1, 3],
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Over::Even => Over::Odd,
            Over::Odd => Over::Even,
        }
    }

    pub fn contains(self, slot: usize) -> bool {
        slot % 2 == (self == Over::Odd) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Smoothing {
    /// Joins each under-slot with its counterclockwise successor.
    A,
    B,
}

/// A crossing with its four half-edges listed counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub edges: [Label; 4],
    pub over: Over,
}

impl Crossing {
    pub fn new(edges: [Label; 4], over: Over) -> Self {
        Self { edges, over }
    }

    /// Slot pairs joined by the given smoothing.
    pub fn smoothing_pairs(&self, s: Smoothing) -> [(usize, usize); 2] {
        // Under slots are those not in `over`; the A-smoothing pairs an
        // under slot u with u + 1.
        let under_even = self.over == Over::Odd;
        let pairs_01 = under_even == (s == Smoothing::A);
        if pairs_01 {
            [(0, 1), (2, 3)]
        } else {
            [(1, 2), (3, 0)]
        }
    }

    /// Same crossing with slot `k` moved to slot 0.
    pub fn rotated(&self, k: usize) -> Self {
        let e = self.edges;
        let edges = [e[k % 4], e[(k + 1) % 4], e[(k + 2) % 4], e[(k + 3) % 4]];
        let over = if k % 2 == 0 {
            self.over
        } else {
            self.over.flipped()
        };
        Self { edges, over }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("label {label} occurs {count} times (expected 2)")]
    LabelMultiplicity { label: Label, count: usize },
    #[error("rotation system has {faces} faces, planar embedding needs {expected}")]
    NonPlanar { faces: usize, expected: usize },
    #[error("no crossing with index {0}")]
    UnknownCrossing(usize),
    #[error("no edge labelled {0}")]
    UnknownEdge(Label),
    #[error("diagram has no component to modify")]
    NoComponent,
    #[error("move pattern does not match: {0}")]
    PatternMismatch(&'static str),
}

/// An unoriented framed link diagram in the plane, given combinatorially.
///
/// `kinks` counts residual positive curls (each worth `-A^3`) removed from
/// the diagram but kept as framing bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    pub free_loops: u32,
    pub kinks: i64,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: u32, kinks: i64) -> Self {
        Self {
            crossings,
            free_loops,
            kinks,
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn unknot() -> Self {
        Self::new(Vec::new(), 1, 0)
    }

    /// From PD-style quadruples: counterclockwise, starting at an under-slot.
    pub fn from_pd(code: &[[Label; 4]]) -> Self {
        Self::new(code.iter().map(|&e| Crossing::new(e, Over::Odd)).collect(), 0, 0)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub(crate) fn occurrences(&self) -> BTreeMap<Label, Vec<Dart>> {
        let mut occ: BTreeMap<Label, Vec<Dart>> = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for (s, &l) in c.edges.iter().enumerate() {
                occ.entry(l).or_default().push((i, s));
            }
        }
        occ
    }

    pub fn labels(&self) -> Vec<Label> {
        self.occurrences().into_keys().collect()
    }

    pub fn label_at(&self, dart: Dart) -> Label {
        self.crossings[dart.0].edges[dart.1]
    }

    pub(crate) fn fresh_label(&self) -> Label {
        self.crossings
            .iter()
            .flat_map(|c| c.edges)
            .max()
            .map_or(0, |m| m + 1)
    }

    /// The other end of the edge leaving through `dart`.
    pub fn opposite_dart(&self, dart: Dart) -> Dart {
        let l = self.label_at(dart);
        for (i, c) in self.crossings.iter().enumerate() {
            for (s, &m) in c.edges.iter().enumerate() {
                if m == l && (i, s) != dart {
                    return (i, s);
                }
            }
        }
        panic!("unmatched label {l}");
    }

    /// Faces of the rotation system as dart orbits. Walking a face keeps it
    /// on the left: after arriving at slot `q`, leave through slot `q - 1`.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let occ = self.occurrences();
        let other = |d: Dart| -> Dart {
            let l = self.label_at(d);
            *occ[&l].iter().find(|&&x| x != d).unwrap_or(&d)
        };
        let n = self.crossings.len();
        let mut seen = alloc::vec![[false; 4]; n];
        let mut faces = Vec::new();
        for i in 0..n {
            for s in 0..4 {
                if seen[i][s] {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = (i, s);
                while !seen[d.0][d.1] {
                    seen[d.0][d.1] = true;
                    face.push(d);
                    let (j, q) = other(d);
                    d = (j, (q + 3) % 4);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Connected components of the 4-valent graph (free loops excluded).
    pub fn graph_components(&self) -> usize {
        let mut uf = UnionFind::new(self.crossings.len());
        for darts in self.occurrences().values() {
            if let [a, b] = darts[..] {
                uf.union(a.0, b.0);
            }
        }
        uf.classes()
    }

    /// Structural checks: edge matching and genus zero of the rotation
    /// system (one sphere per connected component).
    pub fn validate(&self) -> Result<(), DiagramError> {
        for (&label, darts) in self.occurrences().iter() {
            if darts.len() != 2 {
                return Err(DiagramError::LabelMultiplicity {
                    label,
                    count: darts.len(),
                });
            }
        }
        let v = self.crossings.len();
        let faces = self.faces().len();
        let expected = v + 2 * self.graph_components();
        if faces != expected {
            return Err(DiagramError::NonPlanar { faces, expected });
        }
        Ok(())
    }

    /// Relabels edges `0..` in order of first appearance.
    pub fn compact_labels(&self) -> Self {
        let mut map = BTreeMap::new();
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let mut edges = c.edges;
                for e in edges.iter_mut() {
                    let next = map.len() as Label;
                    *e = *map.entry(*e).or_insert(next);
                }
                Crossing::new(edges, c.over)
            })
            .collect();
        Self::new(crossings, self.free_loops, self.kinks)
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Self {
        Self::new(
            self.crossings
                .iter()
                .map(|c| Crossing::new(c.edges, c.over.flipped()))
                .collect(),
            self.free_loops,
            -self.kinks,
        )
    }

    /// Distant union.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.fresh_label();
        let mut crossings = self.crossings.clone();
        crossings.extend(
            other
                .crossings
                .iter()
                .map(|c| Crossing::new(c.edges.map(|e| e + offset), c.over)),
        );
        Self::new(
            crossings,
            self.free_loops + other.free_loops,
            self.kinks + other.kinks,
        )
    }
}
