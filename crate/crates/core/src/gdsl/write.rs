//! Canonical text for documents and groupoids.

use std::fmt::Write;

use super::syntax::{ident, ComposeDecl, Document, GroupoidDecl, InverseDecl, MorphismDecl};
use super::Span;
use crate::groupoid::Groupoid;

/// Renders a document so that parsing the output gives an equal document.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    let mut first = true;
    let mut sep = |out: &mut String| {
        if !std::mem::take(&mut first) {
            out.push('\n');
        }
    };
    for g in &doc.groupoids {
        sep(&mut out);
        let _ = writeln!(out, "groupoid {} {{", g.name.value);
        let objects: Vec<&str> = g.objects.iter().map(|o| o.value.as_str()).collect();
        let _ = writeln!(out, "  objects: {}", objects.join(", "));
        for m in &g.morphisms {
            let _ = writeln!(
                out,
                "  morphism {} : {} -> {}",
                m.name.value, m.source.value, m.target.value
            );
        }
        for c in &g.compositions {
            let _ = writeln!(out, "  compose {} . {} = {}", c.g.value, c.f.value, c.h.value);
        }
        for i in &g.inverses {
            let _ = writeln!(out, "  inverse {} = {}", i.f.value, i.inverse.value);
        }
        out.push_str("}\n");
    }
    for f in &doc.functors {
        sep(&mut out);
        let _ = writeln!(
            out,
            "functor {} : {} -> {} {{",
            f.name.value, f.source.value, f.target.value
        );
        for (x, a) in &f.objects {
            let _ = writeln!(out, "  object {} => {}", x.value, a.value);
        }
        for (m, u) in &f.morphisms {
            let _ = writeln!(out, "  morphism {} => {}", m.value, u.value);
        }
        out.push_str("}\n");
    }
    for s in &doc.subgroupoids {
        sep(&mut out);
        let _ = writeln!(out, "subgroupoid {} of {} {{", s.name.value, s.parent.value);
        if !s.morphisms.is_empty() {
            let names: Vec<&str> = s.morphisms.iter().map(|m| m.value.as_str()).collect();
            let _ = writeln!(out, "  morphisms: {}", names.join(", "));
        }
        out.push_str("}\n");
    }
    out
}

/// Every morphism, every composite and every inverse, spelled out.
pub fn groupoid_decl(g: &Groupoid) -> GroupoidDecl {
    let mname = |f| ident(g.morphism_name(f));
    let mut compositions = Vec::new();
    for f in g.morphisms() {
        for &h in g.outgoing(g.target(f)) {
            compositions.push(ComposeDecl {
                g: mname(h),
                f: mname(f),
                h: mname(g.comp(h, f)),
                span: Span::default(),
            });
        }
    }
    GroupoidDecl {
        name: ident(g.name()),
        objects: g.objects().map(|x| ident(g.object_name(x))).collect(),
        morphisms: g
            .morphisms()
            .map(|f| MorphismDecl {
                name: mname(f),
                source: ident(g.object_name(g.source(f))),
                target: ident(g.object_name(g.target(f))),
            })
            .collect(),
        compositions,
        inverses: g
            .morphisms()
            .map(|f| InverseDecl {
                f: mname(f),
                inverse: mname(g.inverse(f)),
                span: Span::default(),
            })
            .collect(),
    }
}

pub fn serialize_groupoid(g: &Groupoid) -> String {
    serialize(&Document {
        groupoids: vec![groupoid_decl(g)],
        ..Document::default()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic, pair_groupoid};
    use crate::gdsl::{load, parse};

    #[test]
    fn groupoids_survive_a_round_trip() {
        for g in [cyclic(4), pair_groupoid(3)] {
            let text = serialize_groupoid(&g);
            let model = load(&text).unwrap();
            assert_eq!(**model.groupoid(g.name()).unwrap(), g);
            assert_eq!(serialize(&parse(&text).unwrap()), text);
        }
    }
}
