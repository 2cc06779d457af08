//! Brute-force reference computations on plain multiplication tables and
//! base groupoids, written without the library's derived structures.

#![allow(dead_code)]

use gslice::builders::CayleyTable;
use gslice::{Groupoid, MorId, ObjId};

pub type Table = Vec<Vec<usize>>;

pub fn unit(t: &Table) -> usize {
    let n = t.len();
    (0..n)
        .find(|&u| (0..n).all(|x| t[u][x] == x && t[x][u] == x))
        .expect("a group has a unit")
}

pub fn is_homomorphism(a: &Table, b: &Table, map: &[usize]) -> bool {
    let n = a.len();
    (0..n).all(|x| (0..n).all(|y| map[a[x][y]] == b[map[x]][map[y]]))
}

/// Elements sent to the unit, ascending.
pub fn kernel(b: &Table, map: &[usize]) -> Vec<usize> {
    let e = unit(b);
    (0..map.len()).filter(|&x| map[x] == e).collect()
}

/// `(image, fibre)` pairs ordered by image element.
pub fn fibres(map: &[usize]) -> Vec<(usize, Vec<usize>)> {
    let mut images: Vec<usize> = map.to_vec();
    images.sort_unstable();
    images.dedup();
    images
        .into_iter()
        .map(|u| (u, (0..map.len()).filter(|&x| map[x] == u).collect()))
        .collect()
}

/// Right cosets `Hg = {h·g}`, each ascending, ordered by smallest member.
pub fn right_cosets(t: &Table, sub: &[usize]) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let mut coset: Vec<usize> = sub.iter().map(|&h| t[h][g]).collect();
        coset.sort_unstable();
        coset.dedup();
        for &x in &coset {
            seen[x] = true;
        }
        out.push(coset);
    }
    out
}

/// Cases for the one-object comparison: for each pair of library groups,
/// a surjective homomorphism when one exists, otherwise the last one found.
pub fn homomorphism_cases() -> Vec<(CayleyTable, CayleyTable, Vec<usize>)> {
    let lib = CayleyTable::small_groups();
    let by = |name: &str| lib.iter().find(|g| g.name == name).expect("library group").clone();
    let pairs = [
        ("Z4", "Z2"),
        ("Z6", "Z3"),
        ("Z6", "Z2"),
        ("S3", "Z2"),
        ("Z8", "Z4"),
        ("Z2xZ4", "Z4"),
        ("D4", "V4"),
        ("Q8", "V4"),
        ("Z4", "Z4"),
        ("V4", "Z2"),
        ("Z2xZ2xZ2", "Z2"),
        ("S3", "S3"),
        ("Z3", "S3"),
        ("Z2", "S3"),
        ("Q8", "Z2"),
        ("D4", "Z2"),
        ("Z5", "Z1"),
        ("Z7", "Z7"),
        ("Z8", "Z2"),
        ("Z6", "S3"),
    ];
    pairs
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (by(a), by(b));
            let homs = a.homomorphisms_to(&b);
            let map = homs
                .iter()
                .find(|m| {
                    let mut hit = vec![false; b.order()];
                    m.iter().for_each(|&x| hit[x] = true);
                    hit.iter().all(|&h| h)
                })
                .or(homs.last())
                .expect("the trivial map exists")
                .clone();
            (a, b, map)
        })
        .collect()
}

/// Morphisms `u` with `f2∘u = f`, found by scanning the whole base.
pub fn triangles(g: &Groupoid, f: MorId, f2: MorId) -> usize {
    g.morphisms()
        .filter(|&u| g.target(u) == g.source(f2) && g.source(u) == g.source(f))
        .filter(|&u| g.comp(f2, u) == f)
        .count()
}

/// Morphisms of the base that end at `x`.
pub fn into(g: &Groupoid, x: ObjId) -> Vec<MorId> {
    g.morphisms().filter(|&f| g.target(f) == x).collect()
}
