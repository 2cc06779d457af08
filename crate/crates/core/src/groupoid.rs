//! Finite groupoids stored as explicit composition tables.
//!
//! Composition is written `g∘f` and means "apply `f` first, then `g`"; it is
//! defined exactly when `source(g) == target(f)`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Morphism-count guardrail applied by the quadratic constructions.
pub const DEFAULT_SIZE_LIMIT: usize = 10_000;

/// Dense index of an object within one groupoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ObjId(pub usize);

/// Dense index of a morphism within one groupoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "object#{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "morphism#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub source: ObjId,
    pub target: ObjId,
}

/// Unchecked groupoid data, as produced by the parser or by hand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawGroupoid {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    /// Entries `(g, f, h)` meaning `g∘f = h`.
    pub compositions: Vec<(MorId, MorId, MorId)>,
    /// Identity per object, indexed by object id.
    pub identities: Vec<Option<MorId>>,
    /// Inverse per morphism, indexed by morphism id.
    pub inverses: Vec<Option<MorId>>,
}

/// A law of the groupoid definition that the data fails, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    DuplicateObjectName { object: ObjId },
    DuplicateMorphismName { morphism: MorId },
    /// A morphism endpoint, or a table entry, refers to something that does not exist.
    UnknownReference { morphism: Option<MorId> },
    /// A composite entry has the wrong endpoints, or is given for a non-composable pair.
    BadEndpoints { g: MorId, f: MorId, composite: MorId },
    ConflictingComposite { g: MorId, f: MorId },
    MissingComposite { g: MorId, f: MorId },
    MissingIdentity { object: ObjId },
    IdentityViolation { object: ObjId, identity: MorId, witness: MorId },
    InverseViolation { morphism: MorId, inverse: Option<MorId> },
    AssociativityViolation { h: MorId, g: MorId, f: MorId },
}

impl Violation {
    /// Short kind name, as used in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::DuplicateObjectName { .. } | Violation::DuplicateMorphismName { .. } => {
                "DuplicateName"
            }
            Violation::UnknownReference { .. } => "UnresolvedReference",
            Violation::BadEndpoints { .. } => "BadEndpoints",
            Violation::ConflictingComposite { .. } => "ConflictingComposite",
            Violation::MissingComposite { .. } => "MissingComposite",
            Violation::MissingIdentity { .. } | Violation::IdentityViolation { .. } => {
                "IdentityViolation"
            }
            Violation::InverseViolation { .. } => "InverseViolation",
            Violation::AssociativityViolation { .. } => "AssociativityViolation",
        }
    }

    /// Morphisms named by the violation, in witness order.
    pub fn morphisms(&self) -> Vec<MorId> {
        match *self {
            Violation::DuplicateObjectName { .. } | Violation::MissingIdentity { .. } => vec![],
            Violation::DuplicateMorphismName { morphism } => vec![morphism],
            Violation::UnknownReference { morphism } => morphism.into_iter().collect(),
            Violation::BadEndpoints { g, f, composite } => vec![g, f, composite],
            Violation::ConflictingComposite { g, f } | Violation::MissingComposite { g, f } => {
                vec![g, f]
            }
            Violation::IdentityViolation {
                identity, witness, ..
            } => vec![witness, identity],
            Violation::InverseViolation { morphism, inverse } => {
                std::iter::once(morphism).chain(inverse).collect()
            }
            Violation::AssociativityViolation { h, g, f } => vec![h, g, f],
        }
    }

    /// Object named by the violation, if any.
    pub fn object(&self) -> Option<ObjId> {
        match *self {
            Violation::DuplicateObjectName { object }
            | Violation::MissingIdentity { object }
            | Violation::IdentityViolation { object, .. } => Some(object),
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind())?;
        if let Some(object) = self.object() {
            write!(f, " at {object}")?;
        }
        let ms = self.morphisms();
        if !ms.is_empty() {
            let names: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
            write!(f, " ({})", names.join(", "))?;
        }
        Ok(())
    }
}

impl RawGroupoid {
    /// Renders a violation using this data's names.
    pub fn describe(&self, violation: &Violation) -> String {
        let mor = |m: MorId| {
            self.morphisms
                .get(m.0)
                .map_or_else(|| m.to_string(), |x| x.name.clone())
        };
        let obj = |o: ObjId| {
            self.objects
                .get(o.0)
                .cloned()
                .unwrap_or_else(|| o.to_string())
        };
        match *violation {
            Violation::DuplicateObjectName { object } => {
                format!("DuplicateName: object {} declared twice", obj(object))
            }
            Violation::DuplicateMorphismName { morphism } => {
                format!("DuplicateName: morphism {} declared twice", mor(morphism))
            }
            Violation::UnknownReference { morphism } => match morphism {
                Some(m) => format!("UnresolvedReference: morphism {} has an unknown endpoint", mor(m)),
                None => "UnresolvedReference: table entry names an unknown morphism".into(),
            },
            Violation::BadEndpoints { g, f, composite } => format!(
                "BadEndpoints: {} . {} = {} has the wrong endpoints",
                mor(g),
                mor(f),
                mor(composite)
            ),
            Violation::ConflictingComposite { g, f } => format!(
                "ConflictingComposite: {} . {} is given two different values",
                mor(g),
                mor(f)
            ),
            Violation::MissingComposite { g, f } => {
                format!("MissingComposite: {} . {} is not in the table", mor(g), mor(f))
            }
            Violation::MissingIdentity { object } => {
                format!("IdentityViolation: object {} has no identity", obj(object))
            }
            Violation::IdentityViolation {
                object,
                identity,
                witness,
            } => format!(
                "IdentityViolation: {} is not a two-sided identity at {} (witness {})",
                mor(identity),
                obj(object),
                mor(witness)
            ),
            Violation::InverseViolation { morphism, inverse } => match inverse {
                Some(i) => format!(
                    "InverseViolation: {} is not an inverse of {}",
                    mor(i),
                    mor(morphism)
                ),
                None => format!("InverseViolation: {} has no inverse", mor(morphism)),
            },
            Violation::AssociativityViolation { h, g, f } => format!(
                "AssociativityViolation: {h} . ({g} . {f}) != ({h} . {g}) . {f}",
                h = mor(h),
                g = mor(g),
                f = mor(f)
            ),
        }
    }

    /// Checks every groupoid law and returns the validated groupoid, or every violation found.
    pub fn validate(&self) -> std::result::Result<Groupoid, Vec<Violation>> {
        let mut violations = Vec::new();
        let n = self.objects.len();
        let m = self.morphisms.len();

        let mut seen = HashMap::new();
        for (i, name) in self.objects.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                violations.push(Violation::DuplicateObjectName { object: ObjId(i) });
            }
        }
        let mut seen = HashMap::new();
        for (i, mor) in self.morphisms.iter().enumerate() {
            if seen.insert(mor.name.as_str(), i).is_some() {
                violations.push(Violation::DuplicateMorphismName { morphism: MorId(i) });
            }
            if mor.source.0 >= n || mor.target.0 >= n {
                violations.push(Violation::UnknownReference {
                    morphism: Some(MorId(i)),
                });
            }
        }
        if self.identities.len() != n || self.inverses.len() != m {
            violations.push(Violation::UnknownReference { morphism: None });
        }
        if !violations.is_empty() {
            return Err(violations);
        }

        let (outgoing, out_pos) = outgoing_lists(n, &self.morphisms);
        let src = |x: MorId| self.morphisms[x.0].source;
        let tgt = |x: MorId| self.morphisms[x.0].target;

        let mut table: Vec<Vec<Option<MorId>>> = self
            .morphisms
            .iter()
            .map(|f| vec![None; outgoing[f.target.0].len()])
            .collect();
        for &(g, f, h) in &self.compositions {
            if g.0 >= m || f.0 >= m || h.0 >= m {
                violations.push(Violation::UnknownReference { morphism: None });
                continue;
            }
            if src(g) != tgt(f) || src(h) != src(f) || tgt(h) != tgt(g) {
                violations.push(Violation::BadEndpoints { g, f, composite: h });
                continue;
            }
            let slot = &mut table[f.0][out_pos[g.0]];
            match *slot {
                Some(prev) if prev != h => {
                    violations.push(Violation::ConflictingComposite { g, f });
                }
                _ => *slot = Some(h),
            }
        }
        for f in 0..m {
            for (j, &g) in outgoing[tgt(MorId(f)).0].iter().enumerate() {
                if table[f][j].is_none() {
                    violations.push(Violation::MissingComposite { g, f: MorId(f) });
                }
            }
        }
        let table_complete = violations.is_empty();
        let lookup = |g: MorId, f: MorId| table[f.0][out_pos[g.0]];

        let mut identities = Vec::with_capacity(n);
        for (x, id) in self.identities.iter().enumerate() {
            match *id {
                None => violations.push(Violation::MissingIdentity { object: ObjId(x) }),
                Some(i) if i.0 >= m => {
                    violations.push(Violation::UnknownReference { morphism: None })
                }
                Some(i) if src(i) != ObjId(x) || tgt(i) != ObjId(x) => {
                    violations.push(Violation::IdentityViolation {
                        object: ObjId(x),
                        identity: i,
                        witness: i,
                    })
                }
                Some(i) => identities.push(i),
            }
        }
        let identities_ok = identities.len() == n;
        if identities_ok {
            for f in (0..m).map(MorId) {
                let (s, t) = (src(f), tgt(f));
                let (is, it) = (identities[s.0], identities[t.0]);
                if lookup(it, f).is_some_and(|h| h != f) {
                    violations.push(Violation::IdentityViolation {
                        object: t,
                        identity: it,
                        witness: f,
                    });
                }
                if lookup(f, is).is_some_and(|h| h != f) {
                    violations.push(Violation::IdentityViolation {
                        object: s,
                        identity: is,
                        witness: f,
                    });
                }
            }
        }

        let mut inverses = Vec::with_capacity(m);
        for f in (0..m).map(MorId) {
            match self.inverses[f.0] {
                None => violations.push(Violation::InverseViolation {
                    morphism: f,
                    inverse: None,
                }),
                Some(i) if i.0 >= m => {
                    violations.push(Violation::UnknownReference { morphism: None })
                }
                Some(i) => {
                    let endpoints_ok = src(i) == tgt(f) && tgt(i) == src(f);
                    let laws_ok = endpoints_ok
                        && (!identities_ok
                            || (lookup(i, f).is_none_or(|h| h == identities[src(f).0])
                                && lookup(f, i).is_none_or(|h| h == identities[tgt(f).0])));
                    if laws_ok {
                        inverses.push(i);
                    } else {
                        violations.push(Violation::InverseViolation {
                            morphism: f,
                            inverse: Some(i),
                        });
                    }
                }
            }
        }

        if table_complete {
            for f in (0..m).map(MorId) {
                for &g in &outgoing[tgt(f).0] {
                    let gf = lookup(g, f).expect("complete table");
                    for &h in &outgoing[tgt(g).0] {
                        let hg = lookup(h, g).expect("complete table");
                        if lookup(h, gf) != lookup(hg, f) {
                            violations.push(Violation::AssociativityViolation { h, g, f });
                        }
                    }
                }
            }
        }

        if !violations.is_empty() {
            return Err(violations);
        }
        let compose = table
            .into_iter()
            .map(|row| row.into_iter().map(|h| h.expect("complete table")).collect())
            .collect();
        Ok(Groupoid::from_parts(
            self.name.clone(),
            self.objects.clone(),
            self.morphisms.clone(),
            outgoing,
            out_pos,
            compose,
            identities,
            inverses,
        ))
    }
}

fn outgoing_lists(n: usize, morphisms: &[Morphism]) -> (Vec<Vec<MorId>>, Vec<usize>) {
    let mut outgoing = vec![Vec::new(); n];
    let mut pos = vec![0; morphisms.len()];
    for (i, mor) in morphisms.iter().enumerate() {
        let list: &mut Vec<MorId> = &mut outgoing[mor.source.0];
        pos[i] = list.len();
        list.push(MorId(i));
    }
    (outgoing, pos)
}

/// A validated finite groupoid. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    outgoing: Vec<Vec<MorId>>,
    incoming: Vec<Vec<MorId>>,
    out_pos: Vec<usize>,
    /// `compose[f][out_pos[g]] = g∘f`.
    compose: Vec<Vec<MorId>>,
    identities: Vec<MorId>,
    inverses: Vec<MorId>,
    object_index: HashMap<String, ObjId>,
    morphism_index: HashMap<String, MorId>,
}

impl Groupoid {
    #[allow(clippy::too_many_arguments)]
    fn from_parts(
        name: String,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        outgoing: Vec<Vec<MorId>>,
        out_pos: Vec<usize>,
        compose: Vec<Vec<MorId>>,
        identities: Vec<MorId>,
        inverses: Vec<MorId>,
    ) -> Self {
        let mut incoming = vec![Vec::new(); objects.len()];
        for (i, mor) in morphisms.iter().enumerate() {
            incoming[mor.target.0].push(MorId(i));
        }
        let object_index = objects
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), ObjId(i)))
            .collect();
        let morphism_index = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.name.clone(), MorId(i)))
            .collect();
        Groupoid {
            name,
            objects,
            morphisms,
            outgoing,
            incoming,
            out_pos,
            compose,
            identities,
            inverses,
            object_index,
            morphism_index,
        }
    }

    /// Builds a groupoid from data known to satisfy the laws, skipping the
    /// associativity scan. Used by derived constructions; tests validate
    /// their output separately through [`Groupoid::to_raw`].
    pub(crate) fn assemble(
        name: String,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        compose: impl Fn(MorId, MorId) -> MorId,
        identities: Vec<MorId>,
        inverses: Vec<MorId>,
    ) -> Self {
        let (outgoing, out_pos) = outgoing_lists(objects.len(), &morphisms);
        let table = morphisms
            .iter()
            .enumerate()
            .map(|(f, mor)| {
                outgoing[mor.target.0]
                    .iter()
                    .map(|&g| compose(g, MorId(f)))
                    .collect()
            })
            .collect();
        debug_assert_eq!(identities.len(), objects.len());
        debug_assert_eq!(inverses.len(), morphisms.len());
        Groupoid::from_parts(
            name, objects, morphisms, outgoing, out_pos, table, identities, inverses,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same groupoid under another name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjId> + Clone {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = MorId> + Clone {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn morphism(&self, f: MorId) -> &Morphism {
        &self.morphisms[f.0]
    }

    pub fn object_by_name(&self, name: &str) -> Result<ObjId> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn morphism_by_name(&self, name: &str) -> Result<MorId> {
        self.morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    pub fn check_object(&self, x: ObjId) -> Result<ObjId> {
        if x.0 < self.objects.len() {
            Ok(x)
        } else {
            Err(Error::UnknownObject(x.to_string()))
        }
    }

    pub fn check_morphism(&self, f: MorId) -> Result<MorId> {
        if f.0 < self.morphisms.len() {
            Ok(f)
        } else {
            Err(Error::UnknownMorphism(f.to_string()))
        }
    }

    pub fn source(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].source
    }

    pub fn target(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].target
    }

    /// Morphisms with source `x`, ascending by id.
    pub fn outgoing(&self, x: ObjId) -> &[MorId] {
        &self.outgoing[x.0]
    }

    /// Morphisms with target `x`, ascending by id.
    pub fn incoming(&self, x: ObjId) -> &[MorId] {
        &self.incoming[x.0]
    }

    /// Morphisms `a → b`, ascending by id.
    pub fn hom(&self, a: ObjId, b: ObjId) -> impl Iterator<Item = MorId> + '_ {
        self.outgoing[a.0]
            .iter()
            .copied()
            .filter(move |&f| self.target(f) == b)
    }

    pub fn is_loop(&self, f: MorId) -> bool {
        self.source(f) == self.target(f)
    }

    /// `g∘f` (apply `f`, then `g`).
    pub fn compose(&self, g: MorId, f: MorId) -> Result<MorId> {
        self.check_morphism(g)?;
        self.check_morphism(f)?;
        if self.source(g) != self.target(f) {
            return Err(Error::NotComposable {
                g: self.morphism_name(g).to_string(),
                f: self.morphism_name(f).to_string(),
            });
        }
        Ok(self.comp(g, f))
    }

    /// `g∘f` for a pair known to be composable.
    ///
    /// Panics if `source(g) != target(f)`.
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        assert_eq!(
            self.source(g),
            self.target(f),
            "composing non-composable morphisms {} and {}",
            self.morphism_name(g),
            self.morphism_name(f)
        );
        self.compose[f.0][self.out_pos[g.0]]
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn inverse(&self, f: MorId) -> MorId {
        self.inverses[f.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.source(f).0] == f
    }

    /// Round-trips back to unchecked data with a complete table.
    pub fn to_raw(&self) -> RawGroupoid {
        let mut compositions = Vec::new();
        for f in self.morphisms() {
            for &g in self.outgoing(self.target(f)) {
                compositions.push((g, f, self.comp(g, f)));
            }
        }
        RawGroupoid {
            name: self.name.clone(),
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            compositions,
            identities: self.identities.iter().copied().map(Some).collect(),
            inverses: self.inverses.iter().copied().map(Some).collect(),
        }
    }

    /// Objects of the connected component containing `x`, ascending.
    pub fn component_objects(&self, x: ObjId) -> Vec<ObjId> {
        let mut objs: Vec<ObjId> = self.incoming(x).iter().map(|&f| self.source(f)).collect();
        objs.sort_unstable();
        objs.dedup();
        objs
    }

    /// Partition of the objects into connected components, each ascending,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<ObjId>> {
        let mut seen = vec![false; self.object_count()];
        let mut out = Vec::new();
        for x in self.objects() {
            if !seen[x.0] {
                let comp = self.component_objects(x);
                for y in &comp {
                    seen[y.0] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.object_count() > 0 && self.component_objects(ObjId(0)).len() == self.object_count()
    }

    /// Full subgroupoid on `objects`, which must be ascending and distinct.
    /// Returns the subgroupoid and, per new morphism id, its id here.
    pub fn full_subgroupoid(&self, name: String, objects: &[ObjId]) -> (Groupoid, Vec<MorId>) {
        let mut keep = vec![false; self.object_count()];
        for x in objects {
            keep[x.0] = true;
        }
        let morphisms: Vec<MorId> = self
            .morphisms()
            .filter(|&f| keep[self.source(f).0] && keep[self.target(f).0])
            .collect();
        (self.restricted(name, objects, &morphisms), morphisms)
    }

    /// Subgroupoid on the given objects and morphisms (both ascending); the
    /// morphism set must be closed under composition, identities and inverses.
    pub(crate) fn restricted(&self, name: String, objects: &[ObjId], morphisms: &[MorId]) -> Groupoid {
        let mut obj_map = vec![usize::MAX; self.object_count()];
        for (i, x) in objects.iter().enumerate() {
            obj_map[x.0] = i;
        }
        let mut mor_map = vec![usize::MAX; self.morphism_count()];
        for (i, f) in morphisms.iter().enumerate() {
            mor_map[f.0] = i;
        }
        let new_mor = |f: MorId| MorId(mor_map[f.0]);
        let mors = morphisms
            .iter()
            .map(|&f| Morphism {
                name: self.morphism_name(f).to_string(),
                source: ObjId(obj_map[self.source(f).0]),
                target: ObjId(obj_map[self.target(f).0]),
            })
            .collect();
        Groupoid::assemble(
            name,
            objects.iter().map(|&x| self.object_name(x).to_string()).collect(),
            mors,
            |g, f| new_mor(self.comp(morphisms[g.0], morphisms[f.0])),
            objects.iter().map(|&x| new_mor(self.identity(x))).collect(),
            morphisms.iter().map(|&f| new_mor(self.inverse(f))).collect(),
        )
    }

    /// The opposite groupoid: same names and ids, endpoints swapped,
    /// composition reversed. Applying it twice gives back the original.
    pub fn opposite(&self) -> Groupoid {
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                name: m.name.clone(),
                source: m.target,
                target: m.source,
            })
            .collect();
        Groupoid::assemble(
            name,
            self.objects.clone(),
            morphisms,
            |g, f| self.comp(f, g),
            self.identities.clone(),
            self.inverses.clone(),
        )
    }

    /// Rejects the construction when it would exceed `limit` morphisms.
    pub fn guard_size(&self, produced: usize, limit: usize) -> Result<()> {
        let actual = produced.max(self.morphism_count());
        if actual > limit {
            Err(Error::SizeLimit { actual, limit })
        } else {
            Ok(())
        }
    }
}

/// A connected component, with the inclusion back into its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub groupoid: Groupoid,
    /// Parent id of each component object.
    pub objects: Vec<ObjId>,
    /// Parent id of each component morphism.
    pub morphisms: Vec<MorId>,
}

impl Component {
    /// Component id of a parent object, if it belongs to the component.
    pub fn object_from_parent(&self, x: ObjId) -> Option<ObjId> {
        self.objects.binary_search(&x).ok().map(ObjId)
    }

    pub fn morphism_from_parent(&self, f: MorId) -> Option<MorId> {
        self.morphisms.binary_search(&f).ok().map(MorId)
    }
}

/// The connected component of `g` containing `x`: the full subgroupoid on
/// every object with a morphism into `x`. Keeps the parent's name.
pub fn connected_component(g: &Groupoid, x: ObjId) -> Result<Component> {
    g.check_object(x)?;
    let objects = g.component_objects(x);
    let (groupoid, morphisms) = g.full_subgroupoid(g.name().to_string(), &objects);
    Ok(Component {
        groupoid,
        objects,
        morphisms,
    })
}
