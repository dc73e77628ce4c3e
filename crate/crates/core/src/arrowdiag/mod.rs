//! Arrow diagrams of links in circle bundles over surfaces.
//!
//! A diagram lives in a disk. Strands are closed curves or arcs, each given
//! as the sequence of crossing visits and arrows met along it. Arc ends sit
//! at numbered boundary points `0..boundary_points`; in the twisted bundle
//! over `RP^2` point `i` is identified with its antipode
//! `i + boundary_points / 2`. With no arcs this is an ordinary arrow diagram
//! in `F x S^1`.
//!
//! Patterns never wrap around the start of a closed curve: "adjacent" means
//! consecutive entries of `marks`.

mod moves;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::laurent::LaurentPoly;
use crate::uf::UnionFind;

pub use moves::{
    apply_move, apply_move_with_inverse, move_catalog, MoveError, MoveInfo, MoveKind, MoveSpec, Side,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Mark {
    Crossing {
        id: u32,
        over: bool,
    },
    /// `forward` points along the strand's listing order.
    Arrow {
        forward: bool,
    },
}

impl Mark {
    pub fn flipped_arrow(self) -> Self {
        match self {
            Mark::Arrow { forward } => Mark::Arrow { forward: !forward },
            m => m,
        }
    }

    fn crossing_id(self) -> Option<u32> {
        match self {
            Mark::Crossing { id, .. } => Some(id),
            Mark::Arrow { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Strand {
    pub marks: Vec<Mark>,
    /// `(head, tail)` boundary points of an arc; `None` for a closed curve.
    pub ends: Option<(u32, u32)>,
}

impl Strand {
    pub fn closed(marks: Vec<Mark>) -> Self {
        Self { marks, ends: None }
    }

    pub fn arc(marks: Vec<Mark>, head: u32, tail: u32) -> Self {
        Self {
            marks,
            ends: Some((head, tail)),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.ends.is_none()
    }

    /// Same strand walked backwards.
    pub fn reversed(&self) -> Self {
        Self {
            marks: self.marks.iter().rev().map(|m| m.flipped_arrow()).collect(),
            ends: self.ends.map(|(h, t)| (t, h)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ArrowDiagram {
    pub strands: Vec<Strand>,
    /// Crossing id to sign (`+1` or `-1`); the sign of a curl fixes its
    /// framing factor `(-A^3)^sign`.
    pub crossings: BTreeMap<u32, i8>,
    pub boundary_points: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    EndpointLacksAntipode { point: u32 },
    EndpointOutOfRange { point: u32 },
    EndpointUse { point: u32, uses: usize },
    CrossingVisits { id: u32, visits: usize },
    CrossingLevels { id: u32 },
    UndeclaredCrossing { id: u32 },
    BadSign { id: u32, sign: i8 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EndpointLacksAntipode { point } => write!(f, "endpoint {point} lacks antipode"),
            Self::EndpointOutOfRange { point } => write!(f, "endpoint {point} is not a boundary point"),
            Self::EndpointUse { point, uses } => {
                write!(
                    f,
                    "boundary point {point} is used by {uses} arc ends (expected 1)"
                )
            }
            Self::CrossingVisits { id, visits } => {
                write!(f, "crossing {id} is visited {visits} times (expected 2)")
            }
            Self::CrossingLevels { id } => write!(f, "crossing {id} needs one over and one under visit"),
            Self::UndeclaredCrossing { id } => write!(f, "crossing {id} has no declared sign"),
            Self::BadSign { id, sign } => write!(f, "crossing {id} has sign {sign}"),
        }
    }
}

impl ArrowDiagram {
    pub fn new(strands: Vec<Strand>, crossings: BTreeMap<u32, i8>, boundary_points: u32) -> Self {
        Self {
            strands,
            crossings,
            boundary_points,
        }
    }

    pub fn antipode(&self, point: u32) -> Option<u32> {
        let n = self.boundary_points;
        (n % 2 == 0 && point < n).then(|| (point + n / 2) % n)
    }

    /// Number of antipodal boundary pairs.
    pub fn boundary_pairs(&self) -> u32 {
        self.boundary_points / 2
    }

    pub fn arrow_count(&self) -> usize {
        self.strands
            .iter()
            .flat_map(|s| &s.marks)
            .filter(|m| matches!(m, Mark::Arrow { .. }))
            .count()
    }

    pub(crate) fn visits(&self) -> BTreeMap<u32, Vec<(usize, usize, bool)>> {
        let mut out: BTreeMap<u32, Vec<(usize, usize, bool)>> = BTreeMap::new();
        for (s, strand) in self.strands.iter().enumerate() {
            for (i, m) in strand.marks.iter().enumerate() {
                if let Mark::Crossing { id, over } = *m {
                    out.entry(id).or_default().push((s, i, over));
                }
            }
        }
        out
    }

    /// Every violated invariant; empty when the diagram is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.boundary_points;
        let mut uses = alloc::vec![0usize; n as usize];
        for s in &self.strands {
            if let Some((h, t)) = s.ends {
                for p in [h, t] {
                    match uses.get_mut(p as usize) {
                        Some(u) => *u += 1,
                        None => out.push(Violation::EndpointOutOfRange { point: p }),
                    }
                }
            }
        }
        for (p, &u) in uses.iter().enumerate() {
            let p = p as u32;
            if u != 1 {
                out.push(Violation::EndpointUse { point: p, uses: u });
            }
            if u > 0 && self.antipode(p).is_none() {
                out.push(Violation::EndpointLacksAntipode { point: p });
            }
        }
        let visits = self.visits();
        for (&id, v) in &visits {
            if v.len() != 2 {
                out.push(Violation::CrossingVisits { id, visits: v.len() });
            } else if v[0].2 == v[1].2 {
                out.push(Violation::CrossingLevels { id });
            }
            if !self.crossings.contains_key(&id) {
                out.push(Violation::UndeclaredCrossing { id });
            }
        }
        for (&id, &sign) in &self.crossings {
            if !visits.contains_key(&id) {
                out.push(Violation::CrossingVisits { id, visits: 0 });
            }
            if sign != 1 && sign != -1 {
                out.push(Violation::BadSign { id, sign });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Link components: closed curves, and chains of arcs glued at
    /// antipodal boundary points. Returns, per component, its strand
    /// indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.strands.len());
        let mut at_point: BTreeMap<u32, usize> = BTreeMap::new();
        for (i, s) in self.strands.iter().enumerate() {
            if let Some((h, t)) = s.ends {
                at_point.insert(h, i);
                at_point.insert(t, i);
            }
        }
        for (&p, &s) in &at_point {
            if let Some(q) = self.antipode(p) {
                if let Some(&r) = at_point.get(&q) {
                    uf.union(s, r);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.strands.len() {
            let root = uf.find(i);
            groups.entry(root).or_default().push(i);
        }
        groups.into_values().collect()
    }

    /// Arrow count mod 2 of each component, in the order of
    /// [`Self::components`].
    pub fn arrow_count_parity(&self) -> Vec<u8> {
        self.components()
            .iter()
            .map(|c| {
                let n: usize = c
                    .iter()
                    .flat_map(|&s| &self.strands[s].marks)
                    .filter(|m| matches!(m, Mark::Arrow { .. }))
                    .count();
                (n % 2) as u8
            })
            .collect()
    }

    /// Representative up to reorienting strands, rotating closed curves
    /// and reordering strands.
    pub fn normalized(&self) -> Self {
        let mut strands: Vec<Strand> = self
            .strands
            .iter()
            .map(|s| match s.ends {
                Some((h, t)) if h > t => s.reversed(),
                Some(_) => s.clone(),
                None => {
                    let mut best = s.clone();
                    for cand in [s.clone(), s.reversed()] {
                        for r in 0..cand.marks.len().max(1) {
                            let mut m = cand.marks.clone();
                            m.rotate_left(r);
                            let c = Strand::closed(m);
                            if c < best {
                                best = c;
                            }
                        }
                    }
                    best
                }
            })
            .collect();
        strands.sort();
        Self::new(strands, self.crossings.clone(), self.boundary_points)
    }

    pub fn fresh_crossing_id(&self) -> u32 {
        let used: BTreeSet<u32> = self
            .crossings
            .keys()
            .copied()
            .chain(
                self.strands
                    .iter()
                    .flat_map(|s| s.marks.iter().filter_map(|m| m.crossing_id())),
            )
            .collect();
        (0..).find(|i| !used.contains(i)).unwrap()
    }
}

/// Named generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGenerator {
    Empty,
    /// Closed curve with one arrow.
    X,
    /// `x` with a negative curl: `t = -A^-3 x`.
    T,
    /// Arc between two antipodal points, no crossings.
    K,
    /// Arc between two antipodal points carrying one arrow.
    KPrime,
}

impl NamedGenerator {
    pub const ALL: [NamedGenerator; 5] = [Self::Empty, Self::X, Self::T, Self::K, Self::KPrime];

    pub fn name(self) -> &'static str {
        match self {
            Self::Empty => "empty",
            Self::X => "x",
            Self::T => "t",
            Self::K => "K",
            Self::KPrime => "K'",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == name)
    }

    pub fn diagram(self) -> ArrowDiagram {
        let arrow = Mark::Arrow { forward: true };
        match self {
            Self::Empty => ArrowDiagram::default(),
            Self::X => ArrowDiagram::new(
                alloc::vec![Strand::closed(alloc::vec![arrow])],
                BTreeMap::new(),
                0,
            ),
            Self::T => ArrowDiagram::new(
                alloc::vec![Strand::closed(alloc::vec![
                    arrow,
                    Mark::Crossing { id: 0, over: true },
                    Mark::Crossing { id: 0, over: false },
                ])],
                BTreeMap::from([(0, -1)]),
                0,
            ),
            Self::K => ArrowDiagram::new(alloc::vec![Strand::arc(Vec::new(), 0, 1)], BTreeMap::new(), 2),
            Self::KPrime => ArrowDiagram::new(
                alloc::vec![Strand::arc(alloc::vec![arrow], 0, 1)],
                BTreeMap::new(),
                2,
            ),
        }
    }
}

/// Removes every curl (a crossing whose visits are adjacent), returning the
/// diagram without curls and the product of their factors `(-A^3)^sign`.
pub fn framing_weight(d: &ArrowDiagram) -> (ArrowDiagram, LaurentPoly) {
    let mut cur = d.clone();
    let mut factor = LaurentPoly::one();
    'outer: loop {
        for strand in &cur.strands {
            for w in strand.marks.windows(2) {
                if let (Some(a), Some(b)) = (w[0].crossing_id(), w[1].crossing_id()) {
                    if a == b {
                        let sign = cur.crossings.get(&a).copied().unwrap_or(1) as i64;
                        factor = &factor * &LaurentPoly::monomial(-1, 3).unit_pow(sign).unwrap();
                        cur = apply_move(&cur, &MoveSpec::R1Remove { id: a }).expect("adjacent visits");
                        continue 'outer;
                    }
                }
            }
        }
        return (cur, factor);
    }
}
