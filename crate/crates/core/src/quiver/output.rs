//! Text renderings of the quiver and its relations.

use serde_json::{json, Value};

use super::{Quiver, RelationSet};

/// Graphviz source with vertices and arrows in construction order.
pub fn quiver_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph Q {\n  rankdir=LR;\n");
    for (v, label) in q.vertices.iter().enumerate() {
        out.push_str(&format!("  v{v} [label=\"{label}\"];\n"));
    }
    for ar in &q.arrows {
        out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", ar.source, ar.target, ar.name));
    }
    out.push_str("}\n");
    out
}

/// Relations with their endpoints, terms and provenance.
pub fn relations_json(q: &Quiver, rels: &RelationSet) -> Value {
    let items: Vec<Value> = rels
        .relations
        .iter()
        .map(|r| {
            let (s, t) = r.endpoints(q).unwrap_or((0, 0));
            let terms: Vec<Value> = r
                .terms
                .iter()
                .map(|(c, p)| json!({"coeff": c.to_string(), "path": p.display(q), "length": p.len()}))
                .collect();
            json!({
                "source": q.vertices[s],
                "target": q.vertices[t],
                "text": r.display(q),
                "terms": terms,
                "provenance": r.provenance,
            })
        })
        .collect();
    json!({"rs": [rels.rs.0, rels.rs.1], "relations": items})
}
