//! Local rewrites of arrow diagrams. Every move comes with an inverse
//! computed from the data it consumed, so `apply(inverse, apply(m, d))`
//! returns `d` up to [`ArrowDiagram::normalized`].

use alloc::vec::Vec;

use super::{ArrowDiagram, Mark, Strand};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Side {
    Head,
    Tail,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "move", rename_all = "snake_case"))]
pub enum MoveSpec {
    /// Inserts a curl `[X, X]` before `marks[pos]`.
    R1Add {
        strand: usize,
        pos: usize,
        sign: i8,
        first_over: bool,
        id: Option<u32>,
    },
    R1Remove {
        id: u32,
    },
    /// Pushes one strand over another: the pair `ids` is inserted before
    /// `over.1` on strand `over.0` and before `under.1` on strand
    /// `under.0`, in the same order if `parallel`, else reversed.
    R2Create {
        over: (usize, usize),
        under: (usize, usize),
        parallel: bool,
        first_sign: i8,
        ids: Option<(u32, u32)>,
        /// With `over == under`, put the under pair first.
        #[cfg_attr(feature = "serde", serde(default))]
        under_first: bool,
    },
    R2Remove {
        ids: (u32, u32),
    },
    /// Swaps the order of visits along each side of a transitive triangle.
    R3 {
        ids: [u32; 3],
    },
    /// Removes adjacent opposite arrows at `pos`, `pos + 1`.
    ArrowCancel {
        strand: usize,
        pos: usize,
    },
    ArrowCreate {
        strand: usize,
        pos: usize,
        first_forward: bool,
    },
    /// Exchanges an arrow with the neighbouring crossing visit.
    ArrowSlide {
        strand: usize,
        pos: usize,
    },
    /// Moves the arrow next to boundary point `point` to the antipodal end,
    /// keeping whether it points towards the boundary.
    BoundaryArrow {
        point: u32,
    },
    /// Pushes the arrow-only segment `marks[from..to]` through the boundary,
    /// creating two antipodal pairs; the outer pair is inserted at half-index
    /// `at`, in the second half when `far`.
    BoundaryPush {
        strand: usize,
        from: usize,
        to: usize,
        at: u32,
        far: bool,
    },
    /// Inverse of [`MoveSpec::BoundaryPush`]: `strand` is an arrow-only arc
    /// whose ends are antipodal to two neighbouring boundary points.
    BoundaryPull {
        strand: usize,
    },
    /// Slides the crossing of the arcs ending at `point`, `point + 1`
    /// through the boundary; it reappears at the antipodes with levels and
    /// sign switched.
    CrossingThroughBoundary {
        point: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Reidemeister1,
    Reidemeister2,
    Reidemeister3,
    ArrowCancellation,
    ArrowSlide,
    BoundaryArrow,
    BoundaryPushPull,
    CrossingThroughBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveInfo {
    pub kind: MoveKind,
    pub name: &'static str,
    /// Needs antipodal boundary points.
    pub twisted_only: bool,
    /// Possible changes of the arrow count.
    pub arrow_deltas: &'static [i32],
    /// Possible changes of the number of antipodal pairs.
    pub pair_deltas: &'static [i32],
}

/// The move catalog.
pub fn move_catalog() -> Vec<MoveInfo> {
    use MoveKind::*;
    let info = |kind, name, twisted_only, arrow_deltas, pair_deltas| MoveInfo {
        kind,
        name,
        twisted_only,
        arrow_deltas,
        pair_deltas,
    };
    alloc::vec![
        info(Reidemeister1, "Reidemeister I (curl)", false, &[0][..], &[0][..]),
        info(Reidemeister2, "Reidemeister II", false, &[0], &[0]),
        info(Reidemeister3, "Reidemeister III", false, &[0], &[0]),
        info(
            ArrowCancellation,
            "cancel or create opposite arrows",
            false,
            &[-2, 2],
            &[0]
        ),
        info(ArrowSlide, "slide an arrow past a crossing", false, &[0], &[0]),
        info(
            BoundaryArrow,
            "pass an arrow through the boundary",
            true,
            &[0],
            &[0]
        ),
        info(
            BoundaryPushPull,
            "push or pull a segment through the boundary",
            true,
            &[0],
            &[2, -2]
        ),
        info(
            CrossingThroughBoundary,
            "pass a crossing through the boundary",
            true,
            &[0],
            &[0]
        ),
    ]
}

impl MoveSpec {
    pub fn kind(&self) -> MoveKind {
        match self {
            Self::R1Add { .. } | Self::R1Remove { .. } => MoveKind::Reidemeister1,
            Self::R2Create { .. } | Self::R2Remove { .. } => MoveKind::Reidemeister2,
            Self::R3 { .. } => MoveKind::Reidemeister3,
            Self::ArrowCancel { .. } | Self::ArrowCreate { .. } => MoveKind::ArrowCancellation,
            Self::ArrowSlide { .. } => MoveKind::ArrowSlide,
            Self::BoundaryArrow { .. } => MoveKind::BoundaryArrow,
            Self::BoundaryPush { .. } | Self::BoundaryPull { .. } => MoveKind::BoundaryPushPull,
            Self::CrossingThroughBoundary { .. } => MoveKind::CrossingThroughBoundary,
        }
    }

    /// Change in the number of antipodal boundary pairs.
    pub fn pair_delta(&self) -> i32 {
        match self {
            Self::BoundaryPush { .. } => 2,
            Self::BoundaryPull { .. } => -2,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("no strand {0}")]
    UnknownStrand(usize),
    #[error("no crossing {0}")]
    UnknownCrossing(u32),
    #[error("no arc end at boundary point {0}")]
    UnknownPoint(u32),
    #[error("crossing id {0} already in use")]
    IdInUse(u32),
    #[error("move pattern does not match: {0}")]
    PatternMismatch(&'static str),
}

use MoveError::PatternMismatch as Mismatch;

pub fn apply_move(d: &ArrowDiagram, m: &MoveSpec) -> Result<ArrowDiagram, MoveError> {
    apply_move_with_inverse(d, m).map(|x| x.0)
}

fn strand(d: &ArrowDiagram, s: usize) -> Result<&Strand, MoveError> {
    d.strands.get(s).ok_or(MoveError::UnknownStrand(s))
}

fn check_fresh(d: &ArrowDiagram, id: u32) -> Result<(), MoveError> {
    if d.crossings.contains_key(&id) || d.visits().contains_key(&id) {
        Err(MoveError::IdInUse(id))
    } else {
        Ok(())
    }
}

fn check_sign(sign: i8) -> Result<(), MoveError> {
    if sign == 1 || sign == -1 {
        Ok(())
    } else {
        Err(Mismatch("crossing sign must be +1 or -1"))
    }
}

fn end_at(d: &ArrowDiagram, point: u32) -> Result<(usize, Side), MoveError> {
    for (i, s) in d.strands.iter().enumerate() {
        if let Some((h, t)) = s.ends {
            if h == point {
                return Ok((i, Side::Head));
            }
            if t == point {
                return Ok((i, Side::Tail));
            }
        }
    }
    Err(MoveError::UnknownPoint(point))
}

fn mark_at_end(d: &ArrowDiagram, (s, side): (usize, Side)) -> Option<Mark> {
    let m = &d.strands[s].marks;
    match side {
        Side::Head => m.first().copied(),
        Side::Tail => m.last().copied(),
    }
}

fn take_at_end(d: &mut ArrowDiagram, (s, side): (usize, Side)) -> Mark {
    let m = &mut d.strands[s].marks;
    match side {
        Side::Head => m.remove(0),
        Side::Tail => m.pop().unwrap(),
    }
}

fn put_at_end(d: &mut ArrowDiagram, (s, side): (usize, Side), mark: Mark) {
    let m = &mut d.strands[s].marks;
    match side {
        Side::Head => m.insert(0, mark),
        Side::Tail => m.push(mark),
    }
}

fn set_end(d: &mut ArrowDiagram, (s, side): (usize, Side), point: u32) {
    let e = d.strands[s].ends.as_mut().expect("arc");
    match side {
        Side::Head => e.0 = point,
        Side::Tail => e.1 = point,
    }
}

fn half(d: &ArrowDiagram) -> Result<u32, MoveError> {
    if d.boundary_points % 2 != 0 {
        return Err(Mismatch("boundary points are not antipodally paired"));
    }
    Ok(d.boundary_points / 2)
}

pub fn apply_move_with_inverse(
    d: &ArrowDiagram,
    m: &MoveSpec,
) -> Result<(ArrowDiagram, MoveSpec), MoveError> {
    match *m {
        MoveSpec::R1Add {
            strand: s,
            pos,
            sign,
            first_over,
            id,
        } => {
            if pos > strand(d, s)?.marks.len() {
                return Err(Mismatch("position past end of strand"));
            }
            check_sign(sign)?;
            let id = id.unwrap_or_else(|| d.fresh_crossing_id());
            check_fresh(d, id)?;
            let mut out = d.clone();
            let marks = &mut out.strands[s].marks;
            marks.insert(
                pos,
                Mark::Crossing {
                    id,
                    over: !first_over,
                },
            );
            marks.insert(pos, Mark::Crossing { id, over: first_over });
            out.crossings.insert(id, sign);
            Ok((out, MoveSpec::R1Remove { id }))
        }
        MoveSpec::R1Remove { id } => {
            let visits = d.visits();
            let v = visits.get(&id).ok_or(MoveError::UnknownCrossing(id))?;
            let [(s, i, first_over), (s2, j, _)] = v[..] else {
                return Err(Mismatch("crossing not visited twice"));
            };
            if s != s2 || j != i + 1 {
                return Err(Mismatch("visits of a curl must be adjacent"));
            }
            let mut out = d.clone();
            out.strands[s].marks.drain(i..=j);
            let sign = out.crossings.remove(&id).unwrap_or(1);
            Ok((
                out,
                MoveSpec::R1Add {
                    strand: s,
                    pos: i,
                    sign,
                    first_over,
                    id: Some(id),
                },
            ))
        }
        MoveSpec::R2Create {
            over,
            under,
            parallel,
            first_sign,
            ids,
            under_first,
        } => {
            for (s, p) in [over, under] {
                if p > strand(d, s)?.marks.len() {
                    return Err(Mismatch("position past end of strand"));
                }
            }
            if over == under && parallel {
                return Err(Mismatch("parallel R2 in a single gap is not planar"));
            }
            check_sign(first_sign)?;
            let (x, y) = match ids {
                Some(p) => p,
                None => {
                    let x = d.fresh_crossing_id();
                    let mut tmp = d.clone();
                    tmp.crossings.insert(x, 1);
                    (x, tmp.fresh_crossing_id())
                }
            };
            if x == y {
                return Err(Mismatch("R2 needs two distinct ids"));
            }
            check_fresh(d, x)?;
            check_fresh(d, y)?;
            let over_pair = [
                Mark::Crossing { id: x, over: true },
                Mark::Crossing { id: y, over: true },
            ];
            let mut under_pair = [
                Mark::Crossing { id: x, over: false },
                Mark::Crossing { id: y, over: false },
            ];
            if !parallel {
                under_pair.reverse();
            }
            let mut inserts = [(over, over_pair), (under, under_pair)];
            if !under_first {
                inserts.swap(0, 1);
            }
            // later position first so the indices stay valid; on a tie the
            // pair spliced last ends up in front
            inserts.sort_by_key(|x| core::cmp::Reverse(x.0));
            let mut out = d.clone();
            for ((s, p), pair) in inserts {
                out.strands[s].marks.splice(p..p, pair);
            }
            out.crossings.insert(x, first_sign);
            out.crossings.insert(y, -first_sign);
            Ok((out, MoveSpec::R2Remove { ids: (x, y) }))
        }
        MoveSpec::R2Remove { ids: (x, y) } => {
            let visits = d.visits();
            let vx = visits.get(&x).ok_or(MoveError::UnknownCrossing(x))?;
            let vy = visits.get(&y).ok_or(MoveError::UnknownCrossing(y))?;
            if x == y || vx.len() != 2 || vy.len() != 2 {
                return Err(Mismatch("R2 needs two crossings visited twice"));
            }
            let sx = d.crossings.get(&x).copied().unwrap_or(1);
            let sy = d.crossings.get(&y).copied().unwrap_or(1);
            if sx != -sy {
                return Err(Mismatch("R2 crossings must have opposite signs"));
            }
            let level = |v: &[(usize, usize, bool)], o: bool| *v.iter().find(|t| t.2 == o).unwrap();
            let (xo, yo, xu, yu) = (
                level(vx, true),
                level(vy, true),
                level(vx, false),
                level(vy, false),
            );
            let adjacent = |a: (usize, usize, bool), b: (usize, usize, bool)| {
                a.0 == b.0 && (a.1 + 1 == b.1 || b.1 + 1 == a.1)
            };
            if !adjacent(xo, yo) || !adjacent(xu, yu) {
                return Err(Mismatch("R2 visits are not adjacent in pairs"));
            }
            let first = if xo.1 < yo.1 { x } else { y };
            let second = if first == x { y } else { x };
            let parallel = (xo.1 < yo.1) == (xu.1 < yu.1);
            let (ob, ub) = (xo.1.min(yo.1), xu.1.min(yu.1));
            let touching = xo.0 == xu.0 && ob.abs_diff(ub) == 2;
            if touching && parallel {
                return Err(Mismatch("parallel R2 in a single gap is not planar"));
            }
            let under_first = touching && ub < ob;
            let mut over = (xo.0, xo.1.min(yo.1));
            let mut under = (xu.0, xu.1.min(yu.1));
            if over.0 == under.0 {
                if over.1 > under.1 {
                    over.1 -= 2;
                } else {
                    under.1 -= 2;
                }
            }
            let mut out = d.clone();
            let mut removals = [(xo.0, xo.1.min(yo.1)), (xu.0, xu.1.min(yu.1))];
            removals.sort_by(|a, b| b.cmp(a));
            for (s, p) in removals {
                out.strands[s].marks.drain(p..p + 2);
            }
            let first_sign = out.crossings.remove(&first).unwrap_or(1);
            out.crossings.remove(&second);
            Ok((
                out,
                MoveSpec::R2Create {
                    over,
                    under,
                    parallel,
                    first_sign,
                    ids: Some((first, second)),
                    under_first,
                },
            ))
        }
        MoveSpec::R3 { ids } => {
            let segments = triangle(d, ids)?;
            let mut out = d.clone();
            for (s, i) in segments {
                out.strands[s].marks.swap(i, i + 1);
            }
            Ok((out, MoveSpec::R3 { ids }))
        }
        MoveSpec::ArrowCancel { strand: s, pos } => {
            let marks = &strand(d, s)?.marks;
            match (marks.get(pos), marks.get(pos + 1)) {
                (Some(Mark::Arrow { forward: a }), Some(Mark::Arrow { forward: b })) if a != b => {
                    let mut out = d.clone();
                    out.strands[s].marks.drain(pos..pos + 2);
                    Ok((
                        out,
                        MoveSpec::ArrowCreate {
                            strand: s,
                            pos,
                            first_forward: *a,
                        },
                    ))
                }
                _ => Err(Mismatch("expected two opposite arrows")),
            }
        }
        MoveSpec::ArrowCreate {
            strand: s,
            pos,
            first_forward,
        } => {
            if pos > strand(d, s)?.marks.len() {
                return Err(Mismatch("position past end of strand"));
            }
            let mut out = d.clone();
            out.strands[s].marks.splice(
                pos..pos,
                [
                    Mark::Arrow {
                        forward: first_forward,
                    },
                    Mark::Arrow {
                        forward: !first_forward,
                    },
                ],
            );
            Ok((out, MoveSpec::ArrowCancel { strand: s, pos }))
        }
        MoveSpec::ArrowSlide { strand: s, pos } => {
            let marks = &strand(d, s)?.marks;
            match (marks.get(pos), marks.get(pos + 1)) {
                (Some(Mark::Arrow { .. }), Some(Mark::Crossing { .. }))
                | (Some(Mark::Crossing { .. }), Some(Mark::Arrow { .. })) => {
                    let mut out = d.clone();
                    out.strands[s].marks.swap(pos, pos + 1);
                    Ok((out, MoveSpec::ArrowSlide { strand: s, pos }))
                }
                _ => Err(Mismatch("expected an arrow next to a crossing")),
            }
        }
        MoveSpec::BoundaryArrow { point } => {
            half(d)?;
            let q = d.antipode(point).ok_or(MoveError::UnknownPoint(point))?;
            let e = end_at(d, point)?;
            let f = end_at(d, q)?;
            let Some(Mark::Arrow { forward }) = mark_at_end(d, e) else {
                return Err(Mismatch("no arrow next to the boundary point"));
            };
            let toward = forward == (e.1 == Side::Tail);
            let mut out = d.clone();
            take_at_end(&mut out, e);
            let forward = toward == (f.1 == Side::Tail);
            put_at_end(&mut out, f, Mark::Arrow { forward });
            Ok((out, MoveSpec::BoundaryArrow { point: q }))
        }
        MoveSpec::BoundaryPush {
            strand: s,
            from,
            to,
            at,
            far,
        } => {
            let h = half(d)?;
            let st = strand(d, s)?;
            if from > to || to > st.marks.len() {
                return Err(Mismatch("segment out of range"));
            }
            if at > h {
                return Err(Mismatch("insertion point out of range"));
            }
            if st.marks[from..to]
                .iter()
                .any(|m| matches!(m, Mark::Crossing { .. }))
            {
                return Err(Mismatch("pushed segment must not contain crossings"));
            }
            let renumber = |p: u32| -> u32 {
                let (base, j) = if p < h { (0, p) } else { (h + 2, p - h) };
                base + if j < at { j } else { j + 2 }
            };
            let new_half = h + 2;
            let (p_in, p_out) = if far {
                (at + new_half, at)
            } else {
                (at, at + new_half)
            };
            let mut out = d.clone();
            for x in out.strands.iter_mut() {
                if let Some((a, b)) = x.ends.as_mut() {
                    *a = renumber(*a);
                    *b = renumber(*b);
                }
            }
            out.boundary_points += 4;
            let marks = st.marks.clone();
            let small = Strand::arc(marks[from..to].to_vec(), p_out, p_out + 1);
            match out.strands[s].ends {
                Some((head, tail)) => {
                    out.strands[s] = Strand::arc(marks[..from].to_vec(), head, p_in);
                    out.strands.push(small);
                    out.strands
                        .push(Strand::arc(marks[to..].to_vec(), p_in + 1, tail));
                }
                None => {
                    let mut rest = marks[to..].to_vec();
                    rest.extend_from_slice(&marks[..from]);
                    out.strands[s] = Strand::arc(rest, p_in + 1, p_in);
                    out.strands.push(small);
                }
            }
            let small_index = if st.is_closed() {
                out.strands.len() - 1
            } else {
                out.strands.len() - 2
            };
            Ok((out, MoveSpec::BoundaryPull { strand: small_index }))
        }
        MoveSpec::BoundaryPull { strand: k } => boundary_pull(d, k),
        MoveSpec::CrossingThroughBoundary { point } => {
            let h = half(d)?;
            if h < 2 || point >= d.boundary_points || (point + 1) % h == 0 {
                return Err(Mismatch("point and its successor must lie in one half"));
            }
            let (p, q) = (point, point + 1);
            let (pa, qa) = (d.antipode(p).unwrap(), d.antipode(q).unwrap());
            let (e_p, e_q) = (end_at(d, p)?, end_at(d, q)?);
            let (f_p, f_q) = (end_at(d, pa)?, end_at(d, qa)?);
            let (Some(Mark::Crossing { id: x1, over: o1 }), Some(Mark::Crossing { id: x2, over: o2 })) =
                (mark_at_end(d, e_p), mark_at_end(d, e_q))
            else {
                return Err(Mismatch("arcs do not end next to a crossing"));
            };
            let same_visit = e_p.0 == e_q.0 && d.strands[e_p.0].marks.len() == 1;
            if x1 != x2 || same_visit {
                return Err(Mismatch("arcs do not meet in a crossing at the boundary"));
            }
            let mut out = d.clone();
            take_at_end(&mut out, e_p);
            take_at_end(&mut out, e_q);
            set_end(&mut out, e_p, q);
            set_end(&mut out, e_q, p);
            set_end(&mut out, f_p, qa);
            set_end(&mut out, f_q, pa);
            put_at_end(&mut out, f_p, Mark::Crossing { id: x1, over: !o1 });
            put_at_end(&mut out, f_q, Mark::Crossing { id: x1, over: !o2 });
            if let Some(sg) = out.crossings.get_mut(&x1) {
                *sg = -*sg;
            }
            Ok((out, MoveSpec::CrossingThroughBoundary { point: pa }))
        }
    }
}

/// Three segments `(strand, i)` whose visit pairs `i, i+1` cover the pairs
/// of `ids` with no visit used twice, one of them over at both visits.
fn triangle(d: &ArrowDiagram, ids: [u32; 3]) -> Result<[(usize, usize); 3], MoveError> {
    let [a, b, c] = ids;
    if a == b || b == c || a == c {
        return Err(Mismatch("R3 needs three distinct crossings"));
    }
    let visits = d.visits();
    for id in ids {
        if visits.get(&id).map(Vec::len) != Some(2) {
            return Err(MoveError::UnknownCrossing(id));
        }
    }
    let pair_index = |x: u32, y: u32| -> Option<usize> {
        let mut p = [x, y];
        p.sort_unstable();
        let mut all = [[a, b], [b, c], [a, c]];
        for q in all.iter_mut() {
            q.sort_unstable();
        }
        all.iter().position(|q| *q == p)
    };
    let mut cands: [Vec<(usize, usize, bool)>; 3] = Default::default();
    for (s, st) in d.strands.iter().enumerate() {
        for (i, w) in st.marks.windows(2).enumerate() {
            if let (Mark::Crossing { id: x, over: ox }, Mark::Crossing { id: y, over: oy }) = (w[0], w[1]) {
                if x != y {
                    if let Some(k) = pair_index(x, y) {
                        cands[k].push((s, i, ox && oy));
                    }
                }
            }
        }
    }
    for &s0 in &cands[0] {
        for &s1 in &cands[1] {
            for &s2 in &cands[2] {
                let segs = [s0, s1, s2];
                let mut pos: Vec<(usize, usize)> =
                    segs.iter().flat_map(|&(s, i, _)| [(s, i), (s, i + 1)]).collect();
                pos.sort_unstable();
                pos.dedup();
                if pos.len() == 6 && segs.iter().any(|x| x.2) {
                    return Ok([(s0.0, s0.1), (s1.0, s1.1), (s2.0, s2.1)]);
                }
            }
        }
    }
    Err(Mismatch("crossings do not form a transitive triangle"))
}

fn boundary_pull(d: &ArrowDiagram, k: usize) -> Result<(ArrowDiagram, MoveSpec), MoveError> {
    let h = half(d)?;
    let small = strand(d, k)?;
    let Some((u, v)) = small.ends else {
        return Err(Mismatch("pulled strand must be an arc"));
    };
    if small.marks.iter().any(|m| matches!(m, Mark::Crossing { .. })) {
        return Err(Mismatch("pulled arc must not contain crossings"));
    }
    let (au, av) = (d.antipode(u).unwrap(), d.antipode(v).unwrap());
    let x = au.min(av);
    if au.max(av) != x + 1 || (x + 1) % h == 0 {
        return Err(Mismatch("arc ends are not antipodal to neighbouring points"));
    }
    // orient the small arc to run from the antipode of x
    let small = if au == x { small.clone() } else { small.reversed() };
    let (s_in, side_in) = end_at(d, x)?;
    let (s_out, side_out) = end_at(d, x + 1)?;
    if s_in == k || s_out == k {
        return Err(Mismatch("arc closes up on itself"));
    }
    let inc = if side_in == Side::Tail {
        d.strands[s_in].clone()
    } else {
        d.strands[s_in].reversed()
    };
    let outg = if side_out == Side::Head {
        d.strands[s_out].clone()
    } else {
        d.strands[s_out].reversed()
    };
    let mut marks = inc.marks.clone();
    let from = marks.len();
    marks.extend_from_slice(&small.marks);
    let to = marks.len();
    let joined = if s_in == s_out {
        Strand::closed(marks)
    } else {
        marks.extend_from_slice(&outg.marks);
        Strand::arc(marks, inc.ends.unwrap().0, outg.ends.unwrap().1)
    };
    let keep = s_in.min(s_out);
    let mut drop: Vec<usize> = [s_in, s_out, k].into_iter().filter(|&i| i != keep).collect();
    drop.sort_unstable();
    drop.dedup();
    let mut out = d.clone();
    out.strands[keep] = joined;
    for &i in drop.iter().rev() {
        out.strands.remove(i);
    }
    let removed = [x, x + 1, u.min(v), u.max(v)];
    let renumber = |p: u32| p - removed.iter().filter(|&&r| r < p).count() as u32;
    for st in out.strands.iter_mut() {
        if let Some((a, b)) = st.ends.as_mut() {
            *a = renumber(*a);
            *b = renumber(*b);
        }
    }
    out.boundary_points -= 4;
    let (at, far) = if x < h { (x, false) } else { (x - h, true) };
    let keep_after = keep - drop.iter().filter(|&&i| i < keep).count();
    Ok((
        out,
        MoveSpec::BoundaryPush {
            strand: keep_after,
            from,
            to,
            at,
            far,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::super::NamedGenerator;
    use super::*;
    use alloc::collections::BTreeMap;

    fn roundtrip(d: &ArrowDiagram, m: &MoveSpec) -> ArrowDiagram {
        let (e, inv) = apply_move_with_inverse(d, m).unwrap();
        assert!(e.is_valid(), "{m:?} gave {:?}", e.validate());
        assert_eq!(
            e.boundary_pairs() as i32,
            d.boundary_pairs() as i32 + m.pair_delta()
        );
        let back = apply_move(&e, &inv).unwrap();
        assert_eq!(back.normalized(), d.normalized(), "{m:?} then {inv:?}");
        e
    }

    fn two_circles() -> ArrowDiagram {
        ArrowDiagram::new(
            alloc::vec![Strand::closed(Vec::new()), Strand::closed(Vec::new())],
            BTreeMap::new(),
            0,
        )
    }

    #[test]
    fn arrow_cancellation() {
        let d = NamedGenerator::X.diagram();
        let e = roundtrip(
            &d,
            &MoveSpec::ArrowCreate {
                strand: 0,
                pos: 1,
                first_forward: false,
            },
        );
        assert_eq!(e.arrow_count(), 3);
        assert_eq!(e.arrow_count_parity(), d.arrow_count_parity());
        let f = roundtrip(&e, &MoveSpec::ArrowCancel { strand: 0, pos: 0 });
        assert_eq!(f.arrow_count(), 1);
        assert_eq!(
            apply_move(&d, &MoveSpec::ArrowCancel { strand: 0, pos: 0 }),
            Err(MoveError::PatternMismatch("expected two opposite arrows"))
        );
    }

    #[test]
    fn r2_in_one_gap() {
        let d = NamedGenerator::X.diagram();
        for under_first in [false, true] {
            let spec = MoveSpec::R2Create {
                over: (0, 1),
                under: (0, 1),
                parallel: false,
                first_sign: -1,
                ids: None,
                under_first,
            };
            let e = roundtrip(&d, &spec);
            let first_over = matches!(e.strands[0].marks[1], Mark::Crossing { over: true, .. });
            assert_eq!(first_over, !under_first);
        }
        let parallel = MoveSpec::R2Create {
            over: (0, 0),
            under: (0, 0),
            parallel: true,
            first_sign: 1,
            ids: None,
            under_first: false,
        };
        assert!(apply_move(&d, &parallel).is_err());
    }

    #[test]
    fn reidemeister_moves() {
        let d = two_circles();
        let spec = MoveSpec::R2Create {
            over: (0, 0),
            under: (1, 0),
            parallel: false,
            first_sign: 1,
            ids: None,
            under_first: false,
        };
        let e = roundtrip(&d, &spec);
        assert_eq!(e.crossings.len(), 2);
        let f = roundtrip(
            &e,
            &MoveSpec::R1Add {
                strand: 1,
                pos: 1,
                sign: -1,
                first_over: true,
                id: None,
            },
        );
        roundtrip(&f, &MoveSpec::R1Remove { id: 2 });
    }

    #[test]
    fn third_move_needs_transitive_triangle() {
        let c = |id, over| Mark::Crossing { id, over };
        let signs = BTreeMap::from([(0, 1), (1, 1), (2, 1)]);
        let d = ArrowDiagram::new(
            alloc::vec![
                Strand::closed(alloc::vec![c(0, true), c(1, true)]),
                Strand::closed(alloc::vec![c(0, false), c(2, true)]),
                Strand::closed(alloc::vec![c(1, false), c(2, false)]),
            ],
            signs.clone(),
            0,
        );
        let e = roundtrip(&d, &MoveSpec::R3 { ids: [0, 1, 2] });
        assert_eq!(e.strands[0].marks, [c(1, true), c(0, true)]);
        let cyclic = ArrowDiagram::new(
            alloc::vec![
                Strand::closed(alloc::vec![c(0, true), c(1, false)]),
                Strand::closed(alloc::vec![c(0, false), c(2, true)]),
                Strand::closed(alloc::vec![c(1, true), c(2, false)]),
            ],
            signs,
            0,
        );
        assert!(apply_move(&cyclic, &MoveSpec::R3 { ids: [0, 1, 2] }).is_err());
    }

    #[test]
    fn boundary_moves() {
        let k = NamedGenerator::KPrime.diagram();
        roundtrip(&k, &MoveSpec::BoundaryArrow { point: 0 });
        let x = NamedGenerator::X.diagram();
        let pushed = roundtrip(
            &x,
            &MoveSpec::BoundaryPush {
                strand: 0,
                from: 0,
                to: 1,
                at: 0,
                far: false,
            },
        );
        assert_eq!(pushed.boundary_pairs(), 2);
        assert_eq!(pushed.arrow_count_parity(), [1]);
        let pushed_k = roundtrip(
            &k,
            &MoveSpec::BoundaryPush {
                strand: 0,
                from: 1,
                to: 1,
                at: 1,
                far: true,
            },
        );
        assert_eq!(pushed_k.boundary_pairs(), 3);
        assert_eq!(pushed_k.components().len(), 1);
    }

    #[test]
    fn crossing_through_boundary() {
        // two arcs crossing just before points 0 and 1 of four
        let d = ArrowDiagram::new(
            alloc::vec![
                Strand::arc(alloc::vec![Mark::Crossing { id: 0, over: true }], 2, 0),
                Strand::arc(alloc::vec![Mark::Crossing { id: 0, over: false }], 3, 1),
            ],
            BTreeMap::from([(0, 1)]),
            4,
        );
        assert!(d.is_valid());
        let e = roundtrip(&d, &MoveSpec::CrossingThroughBoundary { point: 0 });
        assert_eq!(e.crossings[&0], -1);
    }
}
