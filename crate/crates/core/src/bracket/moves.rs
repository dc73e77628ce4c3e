//! Local rewrites of planar diagrams: smoothings and Reidemeister moves.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::diagram::{Crossing, Dart, DiagramError, Label, Over, PlanarDiagram, Smoothing};

/// Sign of a curl: positive curls multiply the bracket by `-A^3`, negative
/// ones by `-A^-3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KinkSign {
    Positive,
    Negative,
}

impl KinkSign {
    pub fn exponent(self) -> i64 {
        match self {
            KinkSign::Positive => 1,
            KinkSign::Negative => -1,
        }
    }
}

/// Replaces crossing `index` by its `choice` smoothing.
pub fn resolve(d: &PlanarDiagram, index: usize, choice: Smoothing) -> Result<PlanarDiagram, DiagramError> {
    if index >= d.crossings.len() {
        return Err(DiagramError::UnknownCrossing(index));
    }
    let mut crossings = d.crossings.clone();
    let c = crossings.remove(index);

    // Union the labels joined by the smoothing.
    let mut parent: BTreeMap<Label, Label> = c.edges.iter().map(|&l| (l, l)).collect();
    fn root(parent: &BTreeMap<Label, Label>, mut x: Label) -> Label {
        while parent[&x] != x {
            x = parent[&x];
        }
        x
    }
    for (a, b) in c.smoothing_pairs(choice) {
        let (ra, rb) = (root(&parent, c.edges[a]), root(&parent, c.edges[b]));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent.insert(hi, lo);
        }
    }
    let rep: BTreeMap<Label, Label> = c.edges.iter().map(|&l| (l, root(&parent, l))).collect();

    let mut still_present = BTreeSet::new();
    for x in crossings.iter_mut() {
        for e in x.edges.iter_mut() {
            if let Some(&r) = rep.get(e) {
                *e = r;
                still_present.insert(r);
            }
        }
    }
    let classes: BTreeSet<Label> = rep.values().copied().collect();
    let closed = classes.difference(&still_present).count() as u32;
    Ok(PlanarDiagram::new(crossings, d.free_loops + closed, d.kinks))
}

/// Inserts a curl of the given sign into the edge `label`.
pub fn add_kink_on_edge(
    d: &PlanarDiagram,
    label: Label,
    sign: KinkSign,
) -> Result<PlanarDiagram, DiagramError> {
    let occ = d.occurrences();
    let darts = occ.get(&label).ok_or(DiagramError::UnknownEdge(label))?;
    let second = *darts.get(1).ok_or(DiagramError::LabelMultiplicity {
        label,
        count: darts.len(),
    })?;
    let fresh = d.fresh_label();
    let (curl, exit) = (fresh, fresh + 1);
    let mut out = d.clone();
    out.crossings[second.0].edges[second.1] = exit;
    out.crossings.push(kink_crossing(label, curl, exit, sign));
    Ok(out)
}

/// Strand enters at slot 0, runs through slot 2 around the curl back into
/// slot 1 and leaves through slot 3.
fn kink_crossing(entry: Label, curl: Label, exit: Label, sign: KinkSign) -> Crossing {
    // With the over-strand on slots 0/2 the A-smoothing closes off the curl,
    // contributing A * delta + A^-1 = -A^3.
    let over = match sign {
        KinkSign::Positive => Over::Even,
        KinkSign::Negative => Over::Odd,
    };
    Crossing::new([entry, curl, curl, exit], over)
}

/// Adds a curl to some component: the lowest-labelled edge if there are
/// crossings, otherwise one of the free loops.
pub fn add_kink(d: &PlanarDiagram, sign: KinkSign) -> Result<PlanarDiagram, DiagramError> {
    if let Some(&label) = d.labels().first() {
        return add_kink_on_edge(d, label, sign);
    }
    if d.free_loops == 0 {
        return Err(DiagramError::NoComponent);
    }
    let mut out = d.clone();
    out.free_loops -= 1;
    let fresh = d.fresh_label();
    out.crossings.push(kink_crossing(fresh, fresh + 1, fresh, sign));
    Ok(out)
}

fn face_of(d: &PlanarDiagram, dart: Dart) -> Option<Vec<Dart>> {
    d.faces().into_iter().find(|f| f.contains(&dart))
}

/// Pushes the edge leaving `second` across the edge leaving `first`, both
/// walked with their common face on the left, creating a bigon with two new
/// crossings. `first_over` puts the first edge on top at both.
pub fn reidemeister2(
    d: &PlanarDiagram,
    first: Dart,
    second: Dart,
    first_over: bool,
) -> Result<PlanarDiagram, DiagramError> {
    for dart in [first, second] {
        if dart.0 >= d.crossings.len() || dart.1 >= 4 {
            return Err(DiagramError::UnknownCrossing(dart.0));
        }
    }
    let face = face_of(d, first).ok_or(DiagramError::PatternMismatch("dart not on a face"))?;
    if !face.contains(&second) {
        return Err(DiagramError::PatternMismatch("darts do not share a face"));
    }
    let (l1, l2) = (d.label_at(first), d.label_at(second));
    if l1 == l2 {
        return Err(DiagramError::PatternMismatch("darts lie on the same edge"));
    }
    let end1 = d.opposite_dart(first);
    let end2 = d.opposite_dart(second);
    let f = d.fresh_label();
    let (e1b, e1c, e2b, e2c) = (f, f + 1, f + 2, f + 3);

    let mut out = d.clone();
    out.crossings[end1.0].edges[end1.1] = e1c;
    out.crossings[end2.0].edges[end2.1] = e2c;
    let over = if first_over { Over::Even } else { Over::Odd };
    // The first edge runs east with the face above it, the second runs west
    // above it; the second edge dips down across the first at y, then comes
    // back up at x.
    out.crossings.push(Crossing::new([e1c, l2, e1b, e2b], over));
    out.crossings.push(Crossing::new([e1b, e2c, l1, e2b], over));
    Ok(out)
}

/// Which strand of a triangular face is over at both of its crossings.
fn triangle_top_or_bottom(d: &PlanarDiagram, face: &[Dart]) -> bool {
    (0..3).any(|k| {
        let (x, p) = face[k];
        let (y, q) = d.opposite_dart(face[k]);
        let a = d.crossings[x].over.contains(p);
        let b = d.crossings[y].over.contains(q);
        a == b
    })
}

/// Third Reidemeister move across the triangular face containing `dart`.
/// The triangle must be transitive (some strand over or under both others).
pub fn reidemeister3(d: &PlanarDiagram, dart: Dart) -> Result<PlanarDiagram, DiagramError> {
    if dart.0 >= d.crossings.len() || dart.1 >= 4 {
        return Err(DiagramError::UnknownCrossing(dart.0));
    }
    let face = face_of(d, dart).ok_or(DiagramError::PatternMismatch("dart not on a face"))?;
    if face.len() != 3 {
        return Err(DiagramError::PatternMismatch("face is not a triangle"));
    }
    let corners: BTreeSet<usize> = face.iter().map(|x| x.0).collect();
    if corners.len() != 3 {
        return Err(DiagramError::PatternMismatch("triangle corners not distinct"));
    }
    if !triangle_top_or_bottom(d, &face) {
        return Err(DiagramError::PatternMismatch("cyclic triangle"));
    }
    let mut out = d.clone();
    for &start in face.iter() {
        let end = d.opposite_dart(start);
        let start_out = (start.0, (start.1 + 2) % 4);
        let end_out = (end.0, (end.1 + 2) % 4);
        let mid = d.label_at(start);
        out.crossings[start.0].edges[start.1] = d.label_at(end_out);
        out.crossings[end.0].edges[end.1] = d.label_at(start_out);
        out.crossings[start_out.0].edges[start_out.1] = mid;
        out.crossings[end_out.0].edges[end_out.1] = mid;
    }
    Ok(out)
}

/// All darts that start a triangular face to which [`reidemeister3`]
/// applies.
pub fn r3_sites(d: &PlanarDiagram) -> Vec<Dart> {
    d.faces()
        .into_iter()
        .filter(|f| {
            f.len() == 3
                && f.iter().map(|x| x.0).collect::<BTreeSet<_>>().len() == 3
                && triangle_top_or_bottom(d, f)
        })
        .map(|f| f[0])
        .collect()
}

/// Pairs of darts on a common face with distinct edges, where
/// [`reidemeister2`] applies.
pub fn r2_sites(d: &PlanarDiagram) -> Vec<(Dart, Dart)> {
    let mut out = Vec::new();
    for face in d.faces() {
        for (i, &a) in face.iter().enumerate() {
            for &b in face.iter().skip(i + 1) {
                if d.label_at(a) != d.label_at(b) {
                    out.push((a, b));
                }
            }
        }
    }
    out
}
