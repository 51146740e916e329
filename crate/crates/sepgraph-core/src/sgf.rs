use crate::error::{GraphError, Location};
use crate::graph::{GraphBuilder, Layer, SeparatedGraph};

const HEADER: &str = "# separated graph (sgf)";

/// Parses SGF text into a validated graph.
///
/// Lines are `vertex NAME layer=0|1`, `edge NAME SOURCE RANGE` and
/// `group RANGE GNAME e1 e2 ...`; blank lines and `#` comments are skipped.
pub fn load(text: &str) -> Result<SeparatedGraph, GraphError> {
    let mut b = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let syntax = |message: &str| GraphError::Syntax { at: Location::line(line), message: message.to_string() };
        b.at_line(line);
        match tokens[0] {
            "vertex" => {
                if tokens.len() != 3 {
                    return Err(syntax("expected `vertex NAME layer=0|1`"));
                }
                let layer = match tokens[2] {
                    "layer=0" => Layer::Zero,
                    "layer=1" => Layer::One,
                    _ => return Err(syntax("layer must be `layer=0` or `layer=1`")),
                };
                b.vertex(tokens[1], layer);
            }
            "edge" => {
                if tokens.len() != 4 {
                    return Err(syntax("expected `edge NAME SOURCE RANGE`"));
                }
                b.edge(tokens[1], tokens[2], tokens[3]);
            }
            "group" => {
                if tokens.len() < 4 {
                    return Err(syntax("expected `group RANGE GNAME e1 e2 ...`"));
                }
                b.group(tokens[1], tokens[2], &tokens[3..]);
            }
            other => return Err(syntax(&format!("unknown declaration `{other}`"))),
        }
    }
    b.build()
}

/// Emits canonical SGF: vertices by `(layer, name)`, edges by name and groups
/// by range vertex then declaration order with sorted members.
pub fn save(g: &SeparatedGraph) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for v in g.vertices() {
        out.push_str(&format!("vertex {} layer={}\n", v.name, v.layer));
    }
    for e in g.edges() {
        out.push_str(&format!("edge {} {} {}\n", e.name, g.vertex_name(e.source), g.vertex_name(e.range)));
    }
    for x in g.groups() {
        out.push_str(&format!("group {} {}", g.vertex_name(x.range), x.name));
        for &e in &x.edges {
            out.push(' ');
            out.push_str(g.edge_name(e));
        }
        out.push('\n');
    }
    out
}
