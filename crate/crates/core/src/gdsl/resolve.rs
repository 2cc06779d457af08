//! Turns a parsed document into validated groupoids, functors and
//! subgroupoids. Every failure becomes a diagnostic at the declaration that
//! caused it.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::syntax::{parse, Document, FunctorDecl, GroupoidDecl, Ident, SubgroupoidDecl};
use super::{Diagnostic, Span};
use crate::functor::{Functor, FunctorViolation, Variance};
use crate::groupoid::{Groupoid, MorId, Morphism, ObjId, RawGroupoid, Violation};
use crate::subgroupoid::{Subgroupoid, SubgroupoidViolation};

/// The validated entities of a document, by name, in declaration order.
#[derive(Clone, Debug)]
pub struct Model {
    pub document: Document,
    groupoids: Vec<(String, Arc<Groupoid>)>,
    functors: Vec<(String, Functor)>,
    subgroupoids: Vec<(String, Subgroupoid)>,
}

impl Model {
    pub fn groupoid(&self, name: &str) -> Option<&Arc<Groupoid>> {
        self.groupoids.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn functor(&self, name: &str) -> Option<&Functor> {
        self.functors.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn subgroupoid(&self, name: &str) -> Option<&Subgroupoid> {
        self.subgroupoids.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    pub fn groupoids(&self) -> &[(String, Arc<Groupoid>)] {
        &self.groupoids
    }

    pub fn functors(&self) -> &[(String, Functor)] {
        &self.functors
    }

    pub fn subgroupoids(&self) -> &[(String, Subgroupoid)] {
        &self.subgroupoids
    }
}

/// Parses and resolves `text`.
pub fn load(text: &str) -> Result<Model, Vec<Diagnostic>> {
    let doc = parse(text).map_err(|d| vec![d])?;
    resolve(doc)
}

pub fn resolve(document: Document) -> Result<Model, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let mut groupoids: Vec<(String, Arc<Groupoid>)> = Vec::new();
    // Names declared but failing validation; references to them are not
    // reported again.
    let mut broken: HashSet<String> = HashSet::new();
    let mut seen = HashSet::new();
    for decl in &document.groupoids {
        if !seen.insert(decl.name.value.clone()) {
            diags.push(duplicate(&decl.name, "groupoid"));
            continue;
        }
        match groupoid(decl) {
            Ok(g) => groupoids.push((decl.name.value.clone(), Arc::new(g))),
            Err(mut d) => {
                broken.insert(decl.name.value.clone());
                diags.append(&mut d);
            }
        }
    }
    let lookup = |name: &Ident, diags: &mut Vec<Diagnostic>| -> Option<Arc<Groupoid>> {
        if let Some((_, g)) = groupoids.iter().find(|(n, _)| *n == name.value) {
            return Some(g.clone());
        }
        if !broken.contains(&name.value) {
            diags.push(unresolved(name, "groupoid"));
        }
        None
    };

    let mut functors = Vec::new();
    let mut seen = HashSet::new();
    for decl in &document.functors {
        if !seen.insert(decl.name.value.clone()) {
            diags.push(duplicate(&decl.name, "functor"));
            continue;
        }
        let (src, tgt) = (lookup(&decl.source, &mut diags), lookup(&decl.target, &mut diags));
        if let (Some(src), Some(tgt)) = (src, tgt) {
            match functor(decl, src, tgt) {
                Ok(f) => functors.push((decl.name.value.clone(), f)),
                Err(mut d) => diags.append(&mut d),
            }
        }
    }

    let mut subgroupoids = Vec::new();
    let mut seen = HashSet::new();
    for decl in &document.subgroupoids {
        if !seen.insert(decl.name.value.clone()) {
            diags.push(duplicate(&decl.name, "subgroupoid"));
            continue;
        }
        if let Some(parent) = lookup(&decl.parent, &mut diags) {
            match subgroupoid(decl, parent) {
                Ok(s) => subgroupoids.push((decl.name.value.clone(), s)),
                Err(mut d) => diags.append(&mut d),
            }
        }
    }

    if diags.is_empty() {
        Ok(Model {
            document,
            groupoids,
            functors,
            subgroupoids,
        })
    } else {
        Err(diags)
    }
}

fn duplicate(name: &Ident, what: &str) -> Diagnostic {
    Diagnostic::new(
        "DuplicateName",
        name.span,
        format!("{what} {} is already declared", name.value),
    )
}

fn unresolved(name: &Ident, what: &str) -> Diagnostic {
    Diagnostic::new(
        "UnresolvedReference",
        name.span,
        format!("no {what} named {}", name.value),
    )
}

fn groupoid(decl: &GroupoidDecl) -> Result<Groupoid, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let mut objects: HashMap<&str, ObjId> = HashMap::new();
    for o in &decl.objects {
        if objects.contains_key(o.value.as_str()) {
            diags.push(duplicate(o, "object"));
        } else {
            objects.insert(&o.value, ObjId(objects.len()));
        }
    }
    let mut names: HashMap<String, MorId> = HashMap::new();
    let mut morphisms: Vec<Morphism> = Vec::new();
    // Declaration span of each morphism; synthesized identities point at their object.
    let mut spans: Vec<Span> = Vec::new();
    for m in &decl.morphisms {
        let s = objects.get(m.source.value.as_str()).copied();
        let t = objects.get(m.target.value.as_str()).copied();
        if s.is_none() {
            diags.push(unresolved(&m.source, "object"));
        }
        if t.is_none() {
            diags.push(unresolved(&m.target, "object"));
        }
        if names.contains_key(&m.name.value) {
            diags.push(duplicate(&m.name, "morphism"));
            continue;
        }
        names.insert(m.name.value.clone(), MorId(morphisms.len()));
        morphisms.push(Morphism {
            name: m.name.value.clone(),
            source: s.unwrap_or(ObjId(0)),
            target: t.unwrap_or(ObjId(0)),
        });
        spans.push(m.name.span);
    }
    if !diags.is_empty() {
        return Err(diags);
    }

    let object_list: Vec<&Ident> = {
        let mut v: Vec<&Ident> = Vec::new();
        for o in &decl.objects {
            if !v.iter().any(|x| x.value == o.value) {
                v.push(o);
            }
        }
        v
    };
    let identities = pick_identities(decl, &object_list, &mut names, &mut morphisms, &mut spans)?;

    let mut table: HashMap<(MorId, MorId), MorId> = HashMap::new();
    let mut compositions = Vec::new();
    let mut compose_spans: HashMap<(MorId, MorId), Span> = HashMap::new();
    for c in &decl.compositions {
        let ids: Vec<Option<MorId>> = [&c.g, &c.f, &c.h]
            .iter()
            .map(|n| {
                let id = names.get(&n.value).copied();
                if id.is_none() {
                    diags.push(unresolved(n, "morphism"));
                }
                id
            })
            .collect();
        if let [Some(g), Some(f), Some(h)] = ids[..] {
            compositions.push((g, f, h));
            table.entry((g, f)).or_insert(h);
            compose_spans.insert((g, f), c.span);
        }
    }
    for f in (0..morphisms.len()).map(MorId) {
        let m = &morphisms[f.0];
        let (s, t) = (identities[m.source.0], identities[m.target.0]);
        for key in [(t, f), (f, s)] {
            if let std::collections::hash_map::Entry::Vacant(slot) = table.entry(key) {
                slot.insert(f);
                compositions.push((key.0, key.1, f));
            }
        }
    }

    let mut inverses: Vec<Option<MorId>> = vec![None; morphisms.len()];
    let mut inverse_spans: HashMap<MorId, Span> = HashMap::new();
    for i in &decl.inverses {
        let (f, g) = (names.get(&i.f.value).copied(), names.get(&i.inverse.value).copied());
        if f.is_none() {
            diags.push(unresolved(&i.f, "morphism"));
        }
        if g.is_none() {
            diags.push(unresolved(&i.inverse, "morphism"));
        }
        if let (Some(f), Some(g)) = (f, g) {
            if inverse_spans.contains_key(&f) {
                diags.push(Diagnostic::new(
                    "DuplicateName",
                    i.span,
                    format!("inverse of {} is already declared", i.f.value),
                ));
            }
            inverses[f.0] = Some(g);
            inverse_spans.insert(f, i.span);
        }
    }
    if !diags.is_empty() {
        return Err(diags);
    }
    for f in 0..morphisms.len() {
        if let Some(g) = inverses[f] {
            if inverses[g.0].is_none() && !inverse_spans.contains_key(&g) {
                inverses[g.0] = Some(MorId(f));
            }
        }
    }
    for f in (0..morphisms.len()).map(MorId) {
        if inverses[f.0].is_some() {
            continue;
        }
        let m = &morphisms[f.0];
        let (s, t) = (identities[m.source.0], identities[m.target.0]);
        inverses[f.0] = (0..morphisms.len()).map(MorId).find(|&g| {
            table.get(&(g, f)) == Some(&s) && table.get(&(f, g)) == Some(&t)
        });
    }

    let raw = RawGroupoid {
        name: decl.name.value.clone(),
        objects: object_list.iter().map(|o| o.value.clone()).collect(),
        morphisms,
        compositions,
        identities: identities.into_iter().map(Some).collect(),
        inverses,
    };
    raw.validate().map_err(|violations| {
        violations
            .iter()
            .map(|v| {
                let span = violation_span(v, &spans, &compose_spans, &inverse_spans, &object_list)
                    .unwrap_or(decl.name.span);
                Diagnostic::new(v.kind(), span, raw.describe(v))
            })
            .collect()
    })
}

/// The identity of each object: a loop named `id_<object>`; otherwise an
/// idempotent loop, preferring one the table shows to be a two-sided unit;
/// otherwise a new morphism `id_<object>`.
fn pick_identities(
    decl: &GroupoidDecl,
    objects: &[&Ident],
    names: &mut HashMap<String, MorId>,
    morphisms: &mut Vec<Morphism>,
    spans: &mut Vec<Span>,
) -> Result<Vec<MorId>, Vec<Diagnostic>> {
    let mut out = Vec::with_capacity(objects.len());
    for (x, o) in objects.iter().enumerate() {
        let x = ObjId(x);
        let is_loop = |m: &MorId, ms: &Vec<Morphism>| ms[m.0].source == x && ms[m.0].target == x;
        let conventional = format!("id_{}", o.value);
        if let Some(&m) = names.get(&conventional) {
            if is_loop(&m, morphisms) {
                out.push(m);
                continue;
            }
            return Err(vec![Diagnostic::new(
                "IdentityViolation",
                spans[m.0],
                format!("{conventional} is reserved for the identity of {}", o.value),
            )]);
        }
        let idempotents: Vec<MorId> = decl
            .compositions
            .iter()
            .filter(|c| c.g.value == c.f.value && c.f.value == c.h.value)
            .filter_map(|c| names.get(&c.g.value).copied())
            .filter(|m| is_loop(m, morphisms))
            .collect();
        let acts_as_unit = |e: MorId| {
            decl.compositions.iter().all(|c| {
                let name = &morphisms[e.0].name;
                (c.g.value != *name || c.f.value == c.h.value)
                    && (c.f.value != *name || c.g.value == c.h.value)
            })
        };
        let chosen = idempotents
            .iter()
            .copied()
            .find(|&e| acts_as_unit(e))
            .or_else(|| idempotents.first().copied());
        let id = chosen.unwrap_or_else(|| {
            let id = MorId(morphisms.len());
            names.insert(conventional.clone(), id);
            morphisms.push(Morphism {
                name: conventional,
                source: x,
                target: x,
            });
            spans.push(o.span);
            id
        });
        out.push(id);
    }
    Ok(out)
}

fn violation_span(
    v: &Violation,
    spans: &[Span],
    compose: &HashMap<(MorId, MorId), Span>,
    inverse: &HashMap<MorId, Span>,
    objects: &[&Ident],
) -> Option<Span> {
    let line = |g: MorId, f: MorId| compose.get(&(g, f)).copied();
    let decl = |m: MorId| spans.get(m.0).copied();
    match *v {
        Violation::BadEndpoints { g, f, .. }
        | Violation::ConflictingComposite { g, f }
        | Violation::MissingComposite { g, f } => line(g, f).or_else(|| decl(g)),
        Violation::IdentityViolation {
            identity, witness, ..
        } => line(identity, witness)
            .or_else(|| line(witness, identity))
            .or_else(|| decl(identity)),
        Violation::InverseViolation { morphism, .. } => {
            inverse.get(&morphism).copied().or_else(|| decl(morphism))
        }
        Violation::AssociativityViolation { h, g, f } => line(h, g)
            .or_else(|| line(g, f))
            .or_else(|| decl(h)),
        Violation::DuplicateMorphismName { morphism } => decl(morphism),
        Violation::UnknownReference { morphism } => morphism.and_then(decl),
        Violation::DuplicateObjectName { object } | Violation::MissingIdentity { object } => {
            objects.get(object.0).map(|o| o.span)
        }
    }
}

fn functor(decl: &FunctorDecl, src: Arc<Groupoid>, tgt: Arc<Groupoid>) -> Result<Functor, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let mut objects: Vec<Option<ObjId>> = vec![None; src.object_count()];
    let mut object_spans: Vec<Option<Span>> = vec![None; src.object_count()];
    for (x, a) in &decl.objects {
        let xi = src.object_by_name(&x.value).ok();
        let ai = tgt.object_by_name(&a.value).ok();
        if xi.is_none() {
            diags.push(unresolved(x, "object"));
        }
        if ai.is_none() {
            diags.push(unresolved(a, "object"));
        }
        if let (Some(xi), Some(ai)) = (xi, ai) {
            if object_spans[xi.0].is_some() {
                diags.push(duplicate(x, "object mapping for"));
            }
            objects[xi.0] = Some(ai);
            object_spans[xi.0] = Some(x.span.through(&a.span));
        }
    }
    let mut morphisms: Vec<Option<MorId>> = vec![None; src.morphism_count()];
    let mut morphism_spans: Vec<Option<Span>> = vec![None; src.morphism_count()];
    for (f, u) in &decl.morphisms {
        let fi = src.morphism_by_name(&f.value).ok();
        let ui = tgt.morphism_by_name(&u.value).ok();
        if fi.is_none() {
            diags.push(unresolved(f, "morphism"));
        }
        if ui.is_none() {
            diags.push(unresolved(u, "morphism"));
        }
        if let (Some(fi), Some(ui)) = (fi, ui) {
            if morphism_spans[fi.0].is_some() {
                diags.push(duplicate(f, "morphism mapping for"));
            }
            morphisms[fi.0] = Some(ui);
            morphism_spans[fi.0] = Some(f.span.through(&u.span));
        }
    }
    if !diags.is_empty() {
        return Err(diags);
    }
    // Object images follow from morphism images; identities from objects.
    for f in src.morphisms() {
        if let Some(u) = morphisms[f.0] {
            for (x, y) in [(src.source(f), tgt.source(u)), (src.target(f), tgt.target(u))] {
                objects[x.0].get_or_insert(y);
            }
        }
    }
    for x in src.objects() {
        if let Some(y) = objects[x.0] {
            morphisms[src.identity(x).0].get_or_insert(tgt.identity(y));
        }
    }
    Functor::validate(src.clone(), tgt, Variance::Covariant, objects, morphisms).map_err(|vs| {
        vs.iter()
            .map(|v| {
                let span = match *v {
                    FunctorViolation::EndpointMismatch { morphism }
                    | FunctorViolation::UnknownImage {
                        morphism: Some(morphism),
                        ..
                    } => morphism_spans[morphism.0],
                    FunctorViolation::CompositionViolation { g, f } => {
                        morphism_spans[g.0].or(morphism_spans[f.0])
                    }
                    FunctorViolation::IdentityViolation { object } => morphism_spans
                        [src.identity(object).0]
                        .or(object_spans[object.0]),
                    _ => None,
                };
                Diagnostic::new(v.kind(), span.unwrap_or(decl.name.span), v.describe(&src))
            })
            .collect()
    })
}

fn subgroupoid(decl: &SubgroupoidDecl, parent: Arc<Groupoid>) -> Result<Subgroupoid, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let mut listed: Vec<(MorId, Span)> = Vec::new();
    for m in &decl.morphisms {
        match parent.morphism_by_name(&m.value) {
            Ok(f) => listed.push((f, m.span)),
            Err(_) => diags.push(unresolved(m, "morphism")),
        }
    }
    if !diags.is_empty() {
        return Err(diags);
    }
    let span_of = |f: MorId| listed.iter().find(|(g, _)| *g == f).map(|(_, s)| *s);
    let members = listed
        .iter()
        .map(|&(f, _)| f)
        .chain(parent.objects().map(|x| parent.identity(x)));
    Subgroupoid::new(parent.clone(), members).map_err(|vs| {
        vs.iter()
            .map(|v| {
                let span = match *v {
                    SubgroupoidViolation::NotClosedUnderComposition { g, f } => {
                        span_of(g).or_else(|| span_of(f))
                    }
                    SubgroupoidViolation::NotClosedUnderInverse { morphism } => span_of(morphism),
                    _ => None,
                };
                Diagnostic::new(v.kind(), span.unwrap_or(decl.name.span), v.describe(&parent))
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR: &str = "groupoid P {
  objects: O1, O2
  morphism f : O1 -> O2
  morphism g : O2 -> O1
  compose g . f = id_O1
  compose f . g = id_O2
}
";

    #[test]
    fn synthesizes_identities_and_inverses() {
        let model = load(PAIR).unwrap();
        let p = model.groupoid("P").unwrap();
        assert_eq!((p.object_count(), p.morphism_count()), (2, 4));
        let f = p.morphism_by_name("f").unwrap();
        assert_eq!(p.morphism_name(p.inverse(f)), "g");
        assert_eq!(p.morphism_name(p.identity(ObjId(1))), "id_O2");
    }

    #[test]
    fn idempotent_loop_is_the_identity() {
        let model = load("groupoid Z2 {\n objects: pt\n morphism e : pt -> pt\n morphism a : pt -> pt\n compose e . e = e\n compose a . a = e\n}").unwrap();
        let z2 = model.groupoid("Z2").unwrap();
        assert_eq!(z2.morphism_count(), 2);
        assert_eq!(z2.morphism_name(z2.identity(ObjId(0))), "e");
    }

    #[test]
    fn unresolved_endpoint() {
        let errs = load("groupoid G {\n  objects: A\n  morphism f : A -> B\n}").unwrap_err();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].kind, "UnresolvedReference");
        assert_eq!(errs[0].span, Span { line: 3, col: 21, len: 1 });
    }

    #[test]
    fn missing_composite_is_reported_at_the_morphism() {
        let errs = load("groupoid G {\n  objects: A, B\n  morphism f : A -> B\n  morphism g : B -> A\n  compose g . f = id_A\n}").unwrap_err();
        assert!(errs.iter().any(|d| d.kind == "MissingComposite" && d.span.line == 3));
    }

    #[test]
    fn duplicate_names() {
        let errs = load("groupoid G { objects: A, A }").unwrap_err();
        assert_eq!(errs[0].kind, "DuplicateName");
        assert_eq!(errs[0].span.col, 26);
        let errs = load("groupoid G { objects: A }\ngroupoid G { objects: B }").unwrap_err();
        assert_eq!(errs[0].span, Span { line: 2, col: 10, len: 1 });
    }

    #[test]
    fn functor_mismatch_points_at_the_mapping() {
        let text = format!(
            "{PAIR}groupoid T {{ objects: pt }}\nfunctor F : P -> T {{\n  morphism f => id_pt\n  morphism g => nope\n}}"
        );
        let errs = load(&text).unwrap_err();
        assert_eq!(errs[0].kind, "UnresolvedReference");
        assert_eq!(errs[0].span, Span { line: 11, col: 17, len: 4 });

        let text = format!(
            "{PAIR}groupoid T {{ objects: pt }}\nfunctor F : P -> T {{\n  morphism f => id_pt\n  morphism g => id_pt\n}}"
        );
        let model = load(&text).unwrap();
        assert_eq!(model.functor("F").unwrap().on_object(ObjId(1)), ObjId(0));
    }

    #[test]
    fn subgroupoid_closure_errors() {
        let z4 = "groupoid Z4 {\n objects: pt\n morphism e : pt -> pt\n morphism a : pt -> pt\n morphism b : pt -> pt\n morphism c : pt -> pt\n compose e . e = e\n compose a . a = b; compose a . b = c; compose a . c = e\n compose b . a = c; compose b . b = e; compose b . c = a\n compose c . a = e; compose c . b = a; compose c . c = b\n}\n";
        let model = load(&format!("{z4}subgroupoid K of Z4 {{ morphisms: b }}")).unwrap();
        assert_eq!(model.subgroupoid("K").unwrap().len(), 2);
        let errs = load(&format!("{z4}subgroupoid K of Z4 {{ morphisms: a }}")).unwrap_err();
        assert_eq!(errs[0].kind, "NotClosedUnderComposition");
        assert_eq!(errs[0].span, Span { line: 12, col: 34, len: 1 });
    }
}
