//! Deterministic DOT and JSON output. Nodes and edges appear in id order;
//! JSON objects keep the field order of the structs below.

use std::fmt::Write;

use serde::Serialize;

use crate::action::ActionGroupoid;
use crate::coset::{CosetActionGroupoid, SlicedCosetGroupoid};
use crate::groupoid::Groupoid;
use crate::kernel::InducedFunctor;
use crate::slice::SliceGroupoid;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per object, one labelled edge per morphism.
pub fn groupoid_dot(g: &Groupoid) -> String {
    dot_with_labels(g, |f| g.morphism_name(f).to_string())
}

/// The slice with each triangle labelled by its underlying morphism.
pub fn slice_dot(s: &SliceGroupoid) -> String {
    dot_with_labels(s.groupoid(), |m| {
        s.base().morphism_name(s.underlying(m)).to_string()
    })
}

fn dot_with_labels(g: &Groupoid, label: impl Fn(crate::groupoid::MorId) -> String) -> String {
    let mut out = format!("digraph {} {{\n", quote(g.name()));
    for x in g.objects() {
        let _ = writeln!(out, "  n{} [label={}];", x.0, quote(g.object_name(x)));
    }
    for f in g.morphisms() {
        let _ = writeln!(
            out,
            "  n{} -> n{} [label={}];",
            g.source(f).0,
            g.target(f).0,
            quote(&label(f))
        );
    }
    out.push_str("}\n");
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismEntry {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupoidReport {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
}

impl GroupoidReport {
    pub fn new(g: &Groupoid) -> Self {
        GroupoidReport {
            name: g.name().to_string(),
            objects: g.objects().map(|x| g.object_name(x).to_string()).collect(),
            morphisms: g
                .morphisms()
                .map(|f| MorphismEntry {
                    name: g.morphism_name(f).to_string(),
                    source: g.object_name(g.source(f)).to_string(),
                    target: g.object_name(g.target(f)).to_string(),
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "{}: {} objects, {} morphisms\nobjects: {}\n",
            self.name,
            self.objects.len(),
            self.morphisms.len(),
            self.objects.join(", ")
        );
        for m in &self.morphisms {
            let _ = writeln!(out, "  {} : {} -> {}", m.name, m.source, m.target);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleEntry {
    pub from: String,
    pub to: String,
    pub underlying: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceReport {
    pub base: String,
    pub apex: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<TriangleEntry>,
    pub zero_object: String,
}

impl SliceReport {
    pub fn new(s: &SliceGroupoid) -> Self {
        let b = s.base();
        let name = |f| b.morphism_name(f).to_string();
        SliceReport {
            base: b.name().to_string(),
            apex: b.object_name(s.apex()).to_string(),
            objects: s.base_objects().iter().map(|&f| name(f)).collect(),
            morphisms: s
                .morphisms()
                .map(|t| TriangleEntry {
                    from: name(t.from),
                    to: name(t.to),
                    underlying: name(t.underlying),
                })
                .collect(),
            zero_object: name(s.zero_object().object),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "{}/{}: {} objects, {} morphisms, zero object {}\nobjects: {}\n",
            self.base,
            self.apex,
            self.objects.len(),
            self.morphisms.len(),
            self.zero_object,
            self.objects.join(", ")
        );
        for t in &self.morphisms {
            let _ = writeln!(out, "  <{}> : {} -> {}", t.underlying, t.from, t.to);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionEntry {
    pub image: String,
    pub class: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub functor: String,
    pub apex: String,
    pub kernel: Vec<String>,
    pub image: Vec<String>,
    pub partition: Vec<PartitionEntry>,
    pub full_at_apex: bool,
    pub preserves_identity: bool,
    pub kernel_properties_hold: bool,
    /// Set when the kernel is empty.
    pub notice: Option<String>,
}

impl KernelReport {
    pub fn new(name: &str, fx: &InducedFunctor) -> Self {
        let g = fx.base().source();
        let h = fx.base().target();
        let names = |v: &[crate::groupoid::MorId], g: &Groupoid| -> Vec<String> {
            v.iter().map(|&f| g.morphism_name(f).to_string()).collect()
        };
        let kernel = fx.kernel();
        let partition = fx.image_and_partition();
        let lemma = fx.check_image_of_identity();
        KernelReport {
            functor: name.to_string(),
            apex: g.object_name(fx.apex()).to_string(),
            kernel: names(&kernel, g),
            image: names(&partition.image, h),
            partition: partition
                .image
                .iter()
                .zip(&partition.classes)
                .map(|(&u, class)| PartitionEntry {
                    image: h.morphism_name(u).to_string(),
                    class: names(class, g),
                })
                .collect(),
            full_at_apex: lemma.full_at(),
            preserves_identity: lemma.preserves_identity,
            kernel_properties_hold: fx.check_kernel_properties().hold(),
            notice: kernel.is_empty().then(|| {
                "the kernel is empty; it contains id_X whenever the functor is full at X".to_string()
            }),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "kernel of {} at {}: {{{}}}\nimage: {{{}}}\npartition:\n",
            self.functor,
            self.apex,
            self.kernel.join(", "),
            self.image.join(", ")
        );
        for p in &self.partition {
            let _ = writeln!(out, "  {} <- {{{}}}", p.image, p.class.join(", "));
        }
        let _ = writeln!(
            out,
            "full at {}: {}\nF id_X = id_FX: {}\nkernel properties: {}",
            self.apex,
            self.full_at_apex,
            self.preserves_identity,
            if self.kernel_properties_hold { "hold" } else { "FAIL" }
        );
        if let Some(n) = &self.notice {
            let _ = writeln!(out, "note: {n}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub base: String,
    pub objects: usize,
    pub morphisms: usize,
    pub pairs: Vec<TriangleEntry>,
}

impl ActionReport {
    pub fn new(a: &ActionGroupoid) -> Self {
        let b = a.base();
        let ag = a.groupoid();
        ActionReport {
            base: b.name().to_string(),
            objects: ag.object_count(),
            morphisms: ag.morphism_count(),
            pairs: ag
                .morphisms()
                .map(|m| {
                    let (g, f) = a.pair(m);
                    TriangleEntry {
                        from: b.morphism_name(g).to_string(),
                        to: b.morphism_name(b.comp(g, f)).to_string(),
                        underlying: b.morphism_name(f).to_string(),
                    }
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "{0}//{0}: {1} objects, {2} morphisms\n",
            self.base, self.objects, self.morphisms
        );
        for p in &self.pairs {
            let _ = writeln!(out, "  ({},{}) : {} -> {}", p.from, p.underlying, p.from, p.to);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub class: String,
    pub source: String,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetReport {
    pub base: String,
    pub subgroupoid: Vec<String>,
    pub classes: Vec<ClassEntry>,
    pub objects: usize,
    pub morphisms: usize,
    /// Present for the sliced variant: the apex and the classes meeting it.
    pub apex: Option<String>,
    pub sliced_classes: Option<Vec<String>>,
}

impl CosetReport {
    pub fn new(c: &CosetActionGroupoid) -> Self {
        let rel = c.relation();
        let g = rel.parent();
        CosetReport {
            base: g.name().to_string(),
            subgroupoid: rel.subgroupoid().names(),
            classes: rel
                .classes()
                .iter()
                .enumerate()
                .map(|(i, cl)| ClassEntry {
                    class: rel.class_name(i),
                    source: g.object_name(cl.source).to_string(),
                    members: cl.members.iter().map(|&f| g.morphism_name(f).to_string()).collect(),
                })
                .collect(),
            objects: c.groupoid().object_count(),
            morphisms: c.groupoid().morphism_count(),
            apex: None,
            sliced_classes: None,
        }
    }

    pub fn sliced(c: &CosetActionGroupoid, apex: &str, sliced: &SlicedCosetGroupoid) -> Self {
        let rel = c.relation();
        CosetReport {
            objects: sliced.groupoid.object_count(),
            morphisms: sliced.groupoid.morphism_count(),
            apex: Some(apex.to_string()),
            sliced_classes: Some(sliced.classes.iter().map(|&i| rel.class_name(i)).collect()),
            ..CosetReport::new(c)
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        match (&self.apex, &self.sliced_classes) {
            (Some(x), Some(classes)) => {
                let _ = writeln!(
                    out,
                    "sliced coset groupoid at {x}: {} objects, {} morphisms\nobjects: {}",
                    self.objects,
                    self.morphisms,
                    classes.join(", ")
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    "coset action groupoid of {}: {} objects, {} morphisms",
                    self.base, self.objects, self.morphisms
                );
            }
        }
        let _ = writeln!(out, "H = {{{}}}", self.subgroupoid.join(", "));
        for c in &self.classes {
            let _ = writeln!(out, "  {} (source {}) = {{{}}}", c.class, c.source, c.members.join(", "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::builders::{cyclic, pair_groupoid};
    use crate::functor::Functor;
    use crate::groupoid::ObjId;
    use crate::kernel::induced_functor;
    use crate::slice::slice;

    #[test]
    fn pair_groupoid_dot() {
        let dot = groupoid_dot(&pair_groupoid(2));
        assert_eq!(dot.matches("[label=").count(), 6);
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.starts_with("digraph \"P2\" {\n  n0 [label=\"O1\"];"));
        let s = slice(Arc::new(pair_groupoid(2)), ObjId(0)).unwrap();
        assert_eq!(slice_dot(&s).matches("->").count(), 4);
    }

    #[test]
    fn kernel_report_json() {
        let f = Functor::from_homomorphism(Arc::new(cyclic(4)), Arc::new(cyclic(2)), &[0, 1, 0, 1])
            .unwrap();
        let report = KernelReport::new("F", &induced_functor(&f, ObjId(0)).unwrap());
        let json = to_json(&report);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["kernel"], serde_json::json!(["e", "a2"]));
        assert_eq!(value["partition"][1]["class"], serde_json::json!(["a", "a3"]));
        assert_eq!(json, to_json(&report));
        assert!(json.find("\"functor\"").unwrap() < json.find("\"kernel\"").unwrap());
    }
}
