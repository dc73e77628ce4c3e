//! Standard small diagrams and a move-based random diagram builder.

use alloc::string::String;
use alloc::vec::Vec;

use super::diagram::{Crossing, PlanarDiagram};
use super::moves::{add_kink, add_kink_on_edge, r2_sites, r3_sites, reidemeister2, reidemeister3, KinkSign};

pub fn hopf_link() -> PlanarDiagram {
    PlanarDiagram::from_pd(&[[4, 1, 3, 2], [2, 3, 1, 4]])
}

pub fn trefoil() -> PlanarDiagram {
    PlanarDiagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
}

pub fn figure_eight() -> PlanarDiagram {
    PlanarDiagram::from_pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]])
}

pub fn cinquefoil() -> PlanarDiagram {
    PlanarDiagram::from_pd(&[
        [1, 6, 2, 7],
        [3, 8, 4, 9],
        [5, 10, 6, 1],
        [7, 2, 8, 3],
        [9, 4, 10, 5],
    ])
}

pub fn three_twist() -> PlanarDiagram {
    PlanarDiagram::from_pd(&[
        [1, 4, 2, 5],
        [3, 8, 4, 9],
        [5, 10, 6, 1],
        [9, 6, 10, 7],
        [7, 2, 8, 3],
    ])
}

pub fn solomon_link() -> PlanarDiagram {
    PlanarDiagram::from_pd(&[[6, 1, 7, 2], [8, 3, 5, 4], [2, 5, 3, 6], [4, 7, 1, 8]])
}

pub fn whitehead_link() -> PlanarDiagram {
    PlanarDiagram::from_pd(&[
        [6, 1, 7, 2],
        [10, 7, 5, 8],
        [4, 5, 1, 6],
        [2, 10, 3, 9],
        [8, 4, 9, 3],
    ])
}

/// `(2, n)` torus knot or link as the closure of a 2-braid.
pub fn torus_2n(n: u32) -> PlanarDiagram {
    // Crossing k joins strand segments 2k, 2k+1 (entering) with
    // 2k+2, 2k+3 (leaving), indices mod 2n.
    let m = 2 * n;
    let crossings = (0..n)
        .map(|k| {
            let a = 2 * k;
            Crossing::new([a % m, (a + 1) % m, (a + 3) % m, (a + 2) % m], super::Over::Odd)
        })
        .collect();
    PlanarDiagram::new(crossings, 0, 0)
}

/// Named diagrams with at most eight crossings.
pub fn standard_corpus() -> Vec<(String, PlanarDiagram)> {
    let unknot = PlanarDiagram::unknot();
    let curl_pos = add_kink(&unknot, KinkSign::Positive).unwrap();
    let curl_neg = add_kink(&unknot, KinkSign::Negative).unwrap();
    let (a, b) = r2_sites(&curl_pos)[0];
    let r2_unknot = reidemeister2(&curl_pos, a, b, true).unwrap();
    let double_curl = add_kink_on_edge(&curl_pos, curl_pos.labels()[0], KinkSign::Negative).unwrap();
    let mut out: Vec<(&str, PlanarDiagram)> = alloc::vec![
        ("empty", PlanarDiagram::empty()),
        ("unknot", unknot.clone()),
        ("two-component unlink", PlanarDiagram::new(Vec::new(), 2, 0)),
        ("unknot with positive curl", curl_pos),
        ("unknot with negative curl", curl_neg),
        ("unknot with opposite curls", double_curl),
        ("unknot with curl and bigon", r2_unknot),
        ("Hopf link", hopf_link()),
        ("Hopf link (mirror)", hopf_link().mirror()),
        ("trefoil", trefoil()),
        ("trefoil (mirror)", trefoil().mirror()),
        ("figure-eight", figure_eight()),
        ("cinquefoil", cinquefoil()),
        ("three-twist knot", three_twist()),
        ("Solomon link", solomon_link()),
        ("Whitehead link", whitehead_link()),
        ("(2,6) torus link", torus_2n(6)),
        ("(2,7) torus knot", torus_2n(7)),
        ("trefoil and Hopf link", trefoil().disjoint_union(&hopf_link())),
        (
            "trefoil plus distant loop",
            trefoil().disjoint_union(&PlanarDiagram::unknot())
        ),
    ];
    out.extend([("figure-eight (mirror)", figure_eight().mirror())]);
    out.into_iter().map(|(n, d)| (String::from(n), d)).collect()
}

/// Builds a valid diagram with at most `max_crossings` crossings from a
/// stream of choices; `pick(n)` must return a value in `0..n`.
pub fn random_diagram<F: FnMut(u32) -> u32>(mut pick: F, max_crossings: usize) -> PlanarDiagram {
    let sign = |x: u32| {
        if x == 0 {
            KinkSign::Positive
        } else {
            KinkSign::Negative
        }
    };
    let mut d = add_kink(&PlanarDiagram::unknot(), sign(pick(2))).unwrap();
    let steps = 4 + pick(12);
    for _ in 0..steps {
        let n = d.crossing_count();
        match pick(6) {
            0 | 1 if n + 2 <= max_crossings => {
                let sites = r2_sites(&d);
                if !sites.is_empty() {
                    let (a, b) = sites[pick(sites.len() as u32) as usize];
                    d = reidemeister2(&d, a, b, pick(2) == 0).unwrap();
                }
            }
            2 if n < max_crossings => {
                let labels = d.labels();
                if !labels.is_empty() {
                    let l = labels[pick(labels.len() as u32) as usize];
                    d = add_kink_on_edge(&d, l, sign(pick(2))).unwrap();
                }
            }
            3 if n > 0 => {
                let i = pick(n as u32) as usize;
                d.crossings[i].over = d.crossings[i].over.flipped();
            }
            4 => {
                let sites = r3_sites(&d);
                if !sites.is_empty() {
                    d = reidemeister3(&d, sites[pick(sites.len() as u32) as usize]).unwrap();
                }
            }
            5 if pick(4) == 0 => d.free_loops += 1,
            _ => {}
        }
    }
    d
}
