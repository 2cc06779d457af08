//! Builders for test instances: groups from Cayley tables, pair groupoids,
//! disjoint unions and direct products.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, MorId, Morphism, ObjId, RawGroupoid};

/// Object name used for one-object groupoids built from a group.
pub const POINT: &str = "pt";

/// A finite group given by its multiplication table.
///
/// `table[a][b]` is the product `a·b`, read as the composite `a∘b`
/// (`b` first) once the group is turned into a one-object groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Index of the two-sided unit, if there is one.
    pub fn unit(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&u| (0..n).all(|x| self.table[u][x] == x && self.table[x][u] == x))
    }

    pub fn inverse_of(&self, a: usize) -> Option<usize> {
        let e = self.unit()?;
        (0..self.order()).find(|&b| self.table[a][b] == e && self.table[b][a] == e)
    }

    /// Checks the group axioms by brute force.
    pub fn check(&self) -> Result<()> {
        let n = self.order();
        let bad = |msg: String| Err(Error::InvalidCayleyTable(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        if self.table.len() != n || self.table.iter().any(|row| row.len() != n) {
            return bad(format!("table is not {n}×{n}"));
        }
        if let Some((a, b)) = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.table[a][b] >= n)
        {
            return bad(format!("entry ({a}, {b}) is out of range"));
        }
        if self.unit().is_none() {
            return bad("no identity element".into());
        }
        if let Some(a) = (0..n).find(|&a| self.inverse_of(a).is_none()) {
            return bad(format!("{} has no inverse", self.elements[a]));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad(format!(
                            "not associative at ({}, {}, {})",
                            self.elements[a], self.elements[b], self.elements[c]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The one-object groupoid of this group. Morphism ids follow element order.
    pub fn to_groupoid(&self) -> Result<Groupoid> {
        self.check()?;
        let n = self.order();
        let pt = ObjId(0);
        let raw = RawGroupoid {
            name: self.name.clone(),
            objects: vec![POINT.to_string()],
            morphisms: self
                .elements
                .iter()
                .map(|e| Morphism {
                    name: e.clone(),
                    source: pt,
                    target: pt,
                })
                .collect(),
            compositions: (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| (MorId(a), MorId(b), MorId(self.table[a][b])))
                .collect(),
            identities: vec![self.unit().map(MorId)],
            inverses: (0..n).map(|a| self.inverse_of(a).map(MorId)).collect(),
        };
        raw.validate().map_err(|v| {
            Error::InvalidCayleyTable(
                v.iter()
                    .map(|x| raw.describe(x))
                    .collect::<Vec<_>>()
                    .join("; "),
            )
        })
    }

    /// Cyclic group of order `n` with elements `e, a, a2, …`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        CayleyTable {
            name: format!("Z{n}"),
            elements: (0..n).map(power_name).collect(),
            table: (0..n)
                .map(|i| (0..n).map(|j| (i + j) % n).collect())
                .collect(),
        }
    }

    /// Direct product; elements are named `x_y`, ordered row-major.
    pub fn product(&self, other: &CayleyTable) -> Self {
        let (n, m) = (self.order(), other.order());
        let mut elements = Vec::with_capacity(n * m);
        for a in &self.elements {
            for b in &other.elements {
                elements.push(format!("{a}_{b}"));
            }
        }
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        CayleyTable {
            name: format!("{}x{}", self.name, other.name),
            elements,
            table,
        }
    }

    /// Closure of a set of permutations under composition, `(p∘q)(i) = p(q(i))`.
    pub fn from_permutations(name: &str, degree: usize, generators: &[Vec<usize>]) -> Self {
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity];
        let mut seen: HashSet<Vec<usize>> = elements.iter().cloned().collect();
        let mut i = 0;
        while i < elements.len() {
            for s in generators {
                let next: Vec<usize> = (0..degree).map(|k| elements[i][s[k]]).collect();
                if seen.insert(next.clone()) {
                    elements.push(next);
                }
            }
            i += 1;
        }
        let index = |p: &Vec<usize>| elements.iter().position(|q| q == p).expect("closed");
        let table = elements
            .iter()
            .map(|p| {
                elements
                    .iter()
                    .map(|q| index(&(0..degree).map(|k| p[q[k]]).collect()))
                    .collect()
            })
            .collect();
        CayleyTable {
            name: name.to_string(),
            elements: (0..elements.len())
                .map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") })
                .collect(),
            table,
        }
    }

    /// Symmetric group on three points.
    pub fn symmetric3() -> Self {
        Self::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// Symmetries of a square.
    pub fn dihedral4() -> Self {
        Self::from_permutations("D4", 4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // element = 4*sign + unit, unit 0..4 is 1, i, j, k
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let names = ["1", "i", "j", "k"];
        let elements = (0..8)
            .map(|x| {
                if x == 0 {
                    "e".to_string()
                } else if x < 4 {
                    names[x].to_string()
                } else {
                    format!("m{}", names[x % 4])
                }
            })
            .collect();
        let table = (0..8)
            .map(|x: usize| {
                (0..8)
                    .map(|y: usize| {
                        let (s, u) = UNIT[x % 4][y % 4];
                        ((x / 4 + y / 4 + s) % 2) * 4 + u
                    })
                    .collect()
            })
            .collect();
        CayleyTable {
            name: "Q8".into(),
            elements,
            table,
        }
    }

    /// Every group of order at most 8, up to isomorphism.
    pub fn small_groups() -> Vec<CayleyTable> {
        let z2 = Self::cyclic(2);
        let mut out: Vec<CayleyTable> = (1..=8).map(Self::cyclic).collect();
        out.push(z2.product(&z2).renamed("V4"));
        out.push(Self::symmetric3());
        out.push(z2.product(&Self::cyclic(4)).renamed("Z2xZ4"));
        out.push(z2.product(&z2).product(&z2).renamed("Z2xZ2xZ2"));
        out.push(Self::dihedral4());
        out.push(Self::quaternion());
        out
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.order();
        let e = self.unit().expect("valid group");
        let mut gens = Vec::new();
        let mut span = vec![e];
        let mut member = vec![false; n];
        member[e] = true;
        for x in 0..n {
            if member[x] {
                continue;
            }
            gens.push(x);
            let mut i = 0;
            while i < span.len() {
                for &s in &gens {
                    let y = self.mul(span[i], s);
                    if !member[y] {
                        member[y] = true;
                        span.push(y);
                    }
                }
                i += 1;
            }
        }
        gens
    }

    /// Every homomorphism `self → other`, as element maps.
    pub fn homomorphisms_to(&self, other: &CayleyTable) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let (n, m) = (self.order(), other.order());
        let e = self.unit().expect("valid group");
        let e2 = other.unit().expect("valid group");
        let mut out = Vec::new();
        let mut images = vec![0; gens.len()];
        loop {
            if let Some(map) = self.extend(&gens, &images, other, e, e2) {
                let hom = (0..n).all(|a| {
                    (0..n).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b]))
                });
                if hom {
                    out.push(map);
                }
            }
            // odometer over generator images
            let mut k = 0;
            loop {
                if k == images.len() {
                    return out;
                }
                images[k] += 1;
                if images[k] < m {
                    break;
                }
                images[k] = 0;
                k += 1;
            }
        }
    }

    fn extend(
        &self,
        gens: &[usize],
        images: &[usize],
        other: &CayleyTable,
        e: usize,
        e2: usize,
    ) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order()];
        map[e] = e2;
        let mut queue = vec![e];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (&s, &t) in gens.iter().zip(images) {
                let y = self.mul(x, s);
                let img = other.mul(map[x], t);
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push(y);
                } else if map[y] != img {
                    return None;
                }
            }
            i += 1;
        }
        Some(map)
    }
}

fn power_name(i: usize) -> String {
    match i {
        0 => "e".to_string(),
        1 => "a".to_string(),
        _ => format!("a{i}"),
    }
}

/// One-object groupoid from a bare table, with elements named `g0, g1, …`.
pub fn one_object_from_table(table: Vec<Vec<usize>>) -> Result<Groupoid> {
    CayleyTable {
        name: "G".into(),
        elements: (0..table.len()).map(|i| format!("g{i}")).collect(),
        table,
    }
    .to_groupoid()
}

/// Cyclic group as a one-object groupoid; elements `e, a, a2, …`.
pub fn cyclic(n: usize) -> Groupoid {
    CayleyTable::cyclic(n)
        .to_groupoid()
        .expect("cyclic tables are groups")
}

/// The pair (indiscrete) groupoid on `n` objects `O1..On`: exactly one
/// morphism per ordered pair. `i → j` is named `p<i>_<j>`, identities `id_O<i>`.
pub fn pair_groupoid(n: usize) -> Groupoid {
    assert!(n > 0, "pair groupoid needs at least one object");
    let objects = (1..=n).map(|i| format!("O{i}")).collect();
    let mut morphisms = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            morphisms.push(Morphism {
                name: if i == j {
                    format!("id_O{}", i + 1)
                } else {
                    format!("p{}_{}", i + 1, j + 1)
                },
                source: ObjId(i),
                target: ObjId(j),
            });
        }
    }
    let id = |i: usize, j: usize| MorId(i * n + j);
    Groupoid::assemble(
        format!("P{n}"),
        objects,
        morphisms,
        |g, f| id(f.0 / n, g.0 % n),
        (0..n).map(|i| id(i, i)).collect(),
        (0..n * n).map(|k| id(k % n, k / n)).collect(),
    )
}

/// Disjoint union. Names are kept when the two sides do not clash;
/// otherwise the left side is prefixed `l_` and the right `r_`.
pub fn disjoint_union(left: &Groupoid, right: &Groupoid) -> Groupoid {
    let clash = left.objects().any(|x| right.object_by_name(left.object_name(x)).is_ok())
        || left
            .morphisms()
            .any(|f| right.morphism_by_name(left.morphism_name(f)).is_ok());
    let (lp, rp) = if clash { ("l_", "r_") } else { ("", "") };
    let (n1, m1) = (left.object_count(), left.morphism_count());
    let objects = left
        .objects()
        .map(|x| format!("{lp}{}", left.object_name(x)))
        .chain(right.objects().map(|x| format!("{rp}{}", right.object_name(x))))
        .collect();
    let morphisms = left
        .morphisms()
        .map(|f| Morphism {
            name: format!("{lp}{}", left.morphism_name(f)),
            source: left.source(f),
            target: left.target(f),
        })
        .chain(right.morphisms().map(|f| Morphism {
            name: format!("{rp}{}", right.morphism_name(f)),
            source: ObjId(right.source(f).0 + n1),
            target: ObjId(right.target(f).0 + n1),
        }))
        .collect();
    let shift = |f: MorId| MorId(f.0 + m1);
    Groupoid::assemble(
        format!("{}_and_{}", left.name(), right.name()),
        objects,
        morphisms,
        |g, f| {
            if f.0 < m1 {
                left.comp(g, f)
            } else {
                shift(right.comp(MorId(g.0 - m1), MorId(f.0 - m1)))
            }
        },
        left.objects()
            .map(|x| left.identity(x))
            .chain(right.objects().map(|x| shift(right.identity(x))))
            .collect(),
        left.morphisms()
            .map(|f| left.inverse(f))
            .chain(right.morphisms().map(|f| shift(right.inverse(f))))
            .collect(),
    )
}

/// Direct product. Objects and morphisms are pairs in row-major order,
/// named `<left>__<right>`.
pub fn direct_product(left: &Groupoid, right: &Groupoid) -> Groupoid {
    let (n2, m2) = (right.object_count(), right.morphism_count());
    let objects = left
        .objects()
        .flat_map(|a| {
            right
                .objects()
                .map(move |b| format!("{}__{}", left.object_name(a), right.object_name(b)))
        })
        .collect();
    let morphisms = left
        .morphisms()
        .flat_map(|f| {
            right.morphisms().map(move |g| Morphism {
                name: format!("{}__{}", left.morphism_name(f), right.morphism_name(g)),
                source: ObjId(left.source(f).0 * n2 + right.source(g).0),
                target: ObjId(left.target(f).0 * n2 + right.target(g).0),
            })
        })
        .collect();
    let pair = |a: MorId, b: MorId| MorId(a.0 * m2 + b.0);
    let split = |x: MorId| (MorId(x.0 / m2), MorId(x.0 % m2));
    Groupoid::assemble(
        format!("{}x{}", left.name(), right.name()),
        objects,
        morphisms,
        |g, f| {
            let ((g1, g2), (f1, f2)) = (split(g), split(f));
            pair(left.comp(g1, f1), right.comp(g2, f2))
        },
        (0..left.object_count() * n2)
            .map(|x| pair(left.identity(ObjId(x / n2)), right.identity(ObjId(x % n2))))
            .collect(),
        (0..left.morphism_count() * m2)
            .map(|x| {
                let (a, b) = split(MorId(x));
                pair(left.inverse(a), right.inverse(b))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_are_groups() {
        let groups = CayleyTable::small_groups();
        assert_eq!(groups.len(), 14);
        for g in &groups {
            g.check().unwrap();
            assert!(g.order() <= 8);
        }
        let q8 = CayleyTable::quaternion();
        // i·j = k, j·i = -k
        assert_eq!(q8.mul(1, 2), 3);
        assert_eq!(q8.mul(2, 1), 7);
    }

    #[test]
    fn one_object_counts() {
        let z2 = one_object_from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!((z2.object_count(), z2.morphism_count()), (1, 2));
        assert!(matches!(
            one_object_from_table(vec![vec![0, 1], vec![1, 1]]),
            Err(Error::InvalidCayleyTable(_))
        ));
        assert!(matches!(
            one_object_from_table(vec![vec![0, 2], vec![1, 0]]),
            Err(Error::InvalidCayleyTable(_))
        ));
    }

    #[test]
    fn pair_and_product_counts() {
        for n in 1..=4 {
            let p = pair_groupoid(n);
            assert_eq!(p.morphism_count(), n * n);
            p.to_raw().validate().unwrap();
            for a in p.objects() {
                for b in p.objects() {
                    assert_eq!(p.hom(a, b).count(), 1);
                }
            }
        }
        let prod = direct_product(&cyclic(2), &pair_groupoid(2));
        assert_eq!((prod.object_count(), prod.morphism_count()), (2, 8));
        prod.to_raw().validate().unwrap();
    }

    #[test]
    fn disjoint_union_prefixes_on_clash() {
        let u = disjoint_union(&cyclic(2), &cyclic(3));
        assert_eq!((u.object_count(), u.morphism_count()), (2, 5));
        assert!(u.morphism_by_name("l_a").is_ok());
        assert!(u.morphism_by_name("r_a2").is_ok());
        u.to_raw().validate().unwrap();
        let v = disjoint_union(&cyclic(2), &pair_groupoid(2));
        assert!(v.morphism_by_name("p1_2").is_ok());
        assert_eq!(v.components().len(), 2);
    }

    #[test]
    fn homomorphism_counts() {
        // |Hom(Z_n, Z_m)| = gcd(n, m)
        let z4 = CayleyTable::cyclic(4);
        let z6 = CayleyTable::cyclic(6);
        assert_eq!(z4.homomorphisms_to(&z6).len(), 2);
        assert_eq!(z6.homomorphisms_to(&z4).len(), 2);
        assert_eq!(z4.homomorphisms_to(&z4).len(), 4);
        // S3 → Z2: trivial and sign
        assert_eq!(
            CayleyTable::symmetric3()
                .homomorphisms_to(&CayleyTable::cyclic(2))
                .len(),
            2
        );
    }
}
