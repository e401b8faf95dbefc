//! Bit-exact binary persistence and edge-list text I/O.
//!
//! The binary format is raw fixed-width little-endian fields with no
//! serialization framework, so loading runs close to disk speed:
//!
//! ```text
//! header:  magic "GSNB" | version u32 | container tag u8
//!          | node count u64 | edge count u64            (25 bytes)
//! body:    node records in ascending id order
//!   undirected:  id i32, len u32, sorted neighbor ids i32[]
//!   directed:    id i32, out_len u32, in_len u32, out i32[], in i32[]
//!   multigraph:  id i32, out_len u32, in_len u32, out edge ids u32[],
//!                in edge ids u32[]; then the edge table:
//!                edge_count x (eid u32, src i32, dst i32), ascending eid
//!   attrnetwork: multigraph body, then node and edge attribute columns
//!                (schema: name, tag, default; rows: 1-byte explicit flag
//!                plus the value when explicit)
//! ```
//!
//! Identical containers always produce identical bytes.

use crate::any::{AnyGraph, ContainerKind};
use crate::attr::{AttrKind, AttrNetwork, AttrType, AttrValue};
use crate::error::GraphError;
use crate::graph::{
    DirectedGraph, DirectedMultigraph, GraphMut, GraphView, UndirectedGraph,
};
use crate::ids::{EdgeId, NodeId};
use std::io::{BufRead, Write};
use thiserror::Error;

pub const MAGIC: [u8; 4] = *b"GSNB";
pub const VERSION: u32 = 1;
/// Header length in bytes: magic + version + tag + two u64 counts.
pub const HEADER_LEN: u64 = 4 + 4 + 1 + 8 + 8;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("bad magic (not a graph binary file)")]
    BadMagic,
    #[error("unsupported format version {0}")]
    BadVersion(u32),
    #[error("unknown container tag {0}")]
    BadContainerTag(u8),
    #[error("truncated stream")]
    Truncated,
    #[error("header counts do not match the decoded body")]
    CountMismatch,
    #[error("neighbor vector of node {0} is not sorted")]
    UnsortedVector(NodeId),
    #[error("corrupt field: {0}")]
    CorruptField(&'static str),
    #[error("malformed line {0}")]
    MalformedLine(u64),
    #[error("negative node id on line {0}")]
    NegativeId(u64),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

// ---------------------------------------------------------------------------
// binary save

struct CountingWriter<'a, W: Write> {
    inner: &'a mut W,
    written: u64,
}

impl<'a, W: Write> CountingWriter<'a, W> {
    fn new(inner: &'a mut W) -> Self {
        CountingWriter { inner, written: 0 }
    }

    fn bytes(&mut self, b: &[u8]) -> Result<(), IoError> {
        self.inner.write_all(b)?;
        self.written += b.len() as u64;
        Ok(())
    }

    fn u8(&mut self, v: u8) -> Result<(), IoError> {
        self.bytes(&[v])
    }

    fn u32(&mut self, v: u32) -> Result<(), IoError> {
        self.bytes(&v.to_le_bytes())
    }

    fn i32(&mut self, v: i32) -> Result<(), IoError> {
        self.bytes(&v.to_le_bytes())
    }

    fn u64(&mut self, v: u64) -> Result<(), IoError> {
        self.bytes(&v.to_le_bytes())
    }
}

fn write_header<W: Write>(
    w: &mut CountingWriter<'_, W>,
    kind: ContainerKind,
    nodes: u64,
    edges: u64,
) -> Result<(), IoError> {
    w.bytes(&MAGIC)?;
    w.u32(VERSION)?;
    w.u8(kind as u8)?;
    w.u64(nodes)?;
    w.u64(edges)
}

fn write_node_vec<W: Write>(w: &mut CountingWriter<'_, W>, vec: &[NodeId]) -> Result<(), IoError> {
    w.u32(vec.len() as u32)?;
    for &v in vec {
        w.i32(v.value() as i32)?;
    }
    Ok(())
}

fn write_value<W: Write>(w: &mut CountingWriter<'_, W>, v: &AttrValue) -> Result<(), IoError> {
    match v {
        AttrValue::Int(x) => w.bytes(&x.to_le_bytes()),
        AttrValue::Float(x) => w.bytes(&x.to_le_bytes()),
        AttrValue::Str(s) => {
            w.u32(s.len() as u32)?;
            w.bytes(s.as_bytes())
        }
    }
}

fn type_tag(ty: AttrType) -> u8 {
    match ty {
        AttrType::Int => 1,
        AttrType::Float => 2,
        AttrType::Str => 3,
    }
}

pub fn save_undirected<W: Write>(g: &UndirectedGraph, w: &mut W) -> Result<u64, IoError> {
    let mut w = CountingWriter::new(w);
    write_header(
        &mut w,
        ContainerKind::Undirected,
        g.node_count() as u64,
        g.edge_count() as u64,
    )?;
    for id in g.node_ids() {
        w.i32(id.value() as i32)?;
        write_node_vec(&mut w, g.neighbors(id).unwrap())?;
    }
    Ok(w.written)
}

pub fn save_directed<W: Write>(g: &DirectedGraph, w: &mut W) -> Result<u64, IoError> {
    let mut w = CountingWriter::new(w);
    write_header(
        &mut w,
        ContainerKind::Directed,
        g.node_count() as u64,
        g.edge_count() as u64,
    )?;
    for id in g.node_ids() {
        let out = g.out_slice(id).unwrap();
        let inn = g.in_slice(id).unwrap();
        w.i32(id.value() as i32)?;
        w.u32(out.len() as u32)?;
        w.u32(inn.len() as u32)?;
        for &v in out {
            w.i32(v.value() as i32)?;
        }
        for &v in inn {
            w.i32(v.value() as i32)?;
        }
    }
    Ok(w.written)
}

fn write_multi_body<W: Write>(
    w: &mut CountingWriter<'_, W>,
    g: &DirectedMultigraph,
) -> Result<(), IoError> {
    for id in g.node_ids() {
        w.i32(id.value() as i32)?;
        let out = g.out_edge_slice(id).unwrap();
        let inn = g.in_edge_slice(id).unwrap();
        w.u32(out.len() as u32)?;
        w.u32(inn.len() as u32)?;
        for &e in out {
            w.u32(e.value())?;
        }
        for &e in inn {
            w.u32(e.value())?;
        }
    }
    for eid in g.edge_ids() {
        let ep = g.edge_endpoints(eid).unwrap();
        w.u32(eid.value())?;
        w.i32(ep.src.value() as i32)?;
        w.i32(ep.dst.value() as i32)?;
    }
    Ok(())
}

pub fn save_multigraph<W: Write>(g: &DirectedMultigraph, w: &mut W) -> Result<u64, IoError> {
    let mut w = CountingWriter::new(w);
    write_header(
        &mut w,
        ContainerKind::Multigraph,
        g.node_count() as u64,
        g.edge_count() as u64,
    )?;
    write_multi_body(&mut w, g)?;
    Ok(w.written)
}

pub fn save_attr_network<W: Write>(net: &AttrNetwork, w: &mut W) -> Result<u64, IoError> {
    let mut w = CountingWriter::new(w);
    write_header(
        &mut w,
        ContainerKind::AttrNetwork,
        net.node_count() as u64,
        net.edge_count() as u64,
    )?;
    write_multi_body(&mut w, net.graph())?;

    let node_ids = net.node_ids();
    let columns = net.columns(AttrKind::Node);
    w.u32(columns.len() as u32)?;
    for (name, col) in columns {
        w.u32(name.len() as u32)?;
        w.bytes(name.as_bytes())?;
        w.u8(type_tag(col.ty))?;
        write_value(&mut w, &col.default)?;
        for &id in &node_ids {
            let slot = net.node_slot(id).unwrap();
            if col.is_explicit(slot) {
                w.u8(1)?;
                write_value(&mut w, &col.values[slot])?;
            } else {
                w.u8(0)?;
            }
        }
    }

    let edge_ids = net.edge_ids();
    let columns = net.columns(AttrKind::Edge);
    w.u32(columns.len() as u32)?;
    for (name, col) in columns {
        w.u32(name.len() as u32)?;
        w.bytes(name.as_bytes())?;
        w.u8(type_tag(col.ty))?;
        write_value(&mut w, &col.default)?;
        for &eid in &edge_ids {
            let slot = eid.index();
            if col.is_explicit(slot) {
                w.u8(1)?;
                write_value(&mut w, &col.values[slot])?;
            } else {
                w.u8(0)?;
            }
        }
    }
    Ok(w.written)
}

/// Saves any container; the header tag records which one.
pub fn save_binary<W: Write>(g: &AnyGraph, w: &mut W) -> Result<u64, IoError> {
    match g {
        AnyGraph::Undirected(g) => save_undirected(g, w),
        AnyGraph::Directed(g) => save_directed(g, w),
        AnyGraph::Multi(g) => save_multigraph(g, w),
        AnyGraph::Attr(g) => save_attr_network(g, w),
    }
}

// ---------------------------------------------------------------------------
// binary load

struct ByteReader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> ByteReader<'a> {
    fn new(buf: &'a [u8]) -> Self {
        ByteReader { buf, pos: 0 }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8], IoError> {
        if self.pos + n > self.buf.len() {
            return Err(IoError::Truncated);
        }
        let s = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8, IoError> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32, IoError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, IoError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn node_id(&mut self) -> Result<NodeId, IoError> {
        let raw = i32::from_le_bytes(self.take(4)?.try_into().unwrap());
        NodeId::try_new(raw as i64).ok_or(IoError::CorruptField("node id"))
    }

    fn node_vec(&mut self, len: usize, owner: NodeId) -> Result<Vec<NodeId>, IoError> {
        let mut vec = Vec::with_capacity(len);
        let mut prev: Option<NodeId> = None;
        for _ in 0..len {
            let id = self.node_id()?;
            if prev.map_or(false, |p| p >= id) {
                return Err(IoError::UnsortedVector(owner));
            }
            prev = Some(id);
            vec.push(id);
        }
        Ok(vec)
    }

    fn edge_vec(&mut self, len: usize, owner: NodeId) -> Result<Vec<EdgeId>, IoError> {
        let mut vec = Vec::with_capacity(len);
        let mut prev: Option<EdgeId> = None;
        for _ in 0..len {
            let id = EdgeId::new(self.u32()?);
            if prev.map_or(false, |p| p >= id) {
                return Err(IoError::UnsortedVector(owner));
            }
            prev = Some(id);
            vec.push(id);
        }
        Ok(vec)
    }

    fn finish(&self) -> Result<(), IoError> {
        if self.pos == self.buf.len() {
            Ok(())
        } else {
            Err(IoError::CountMismatch)
        }
    }
}

fn read_value(r: &mut ByteReader<'_>, ty: AttrType) -> Result<AttrValue, IoError> {
    Ok(match ty {
        AttrType::Int => AttrValue::Int(i64::from_le_bytes(r.take(8)?.try_into().unwrap())),
        AttrType::Float => AttrValue::Float(f64::from_le_bytes(r.take(8)?.try_into().unwrap())),
        AttrType::Str => {
            let len = r.u32()? as usize;
            let bytes = r.take(len)?;
            AttrValue::Str(
                String::from_utf8(bytes.to_vec())
                    .map_err(|_| IoError::CorruptField("utf-8 string"))?,
            )
        }
    })
}

fn read_type_tag(r: &mut ByteReader<'_>) -> Result<AttrType, IoError> {
    match r.u8()? {
        1 => Ok(AttrType::Int),
        2 => Ok(AttrType::Float),
        3 => Ok(AttrType::Str),
        _ => Err(IoError::CorruptField("attribute type tag")),
    }
}

fn load_multi_from(
    r: &mut ByteReader<'_>,
    node_count: usize,
    edge_count: usize,
) -> Result<DirectedMultigraph, IoError> {
    // Node vectors and the edge table are both in the file. The graph is
    // rebuilt from the edge table; the stored vectors are then required to
    // match what the rebuild produced.
    let mut g = DirectedMultigraph::with_capacity(node_count, edge_count);
    let mut stored: Vec<(NodeId, Vec<EdgeId>, Vec<EdgeId>)> = Vec::with_capacity(node_count);
    let mut prev: Option<NodeId> = None;
    for _ in 0..node_count {
        let id = r.node_id()?;
        if prev.map_or(false, |p| p >= id) {
            return Err(IoError::CorruptField("node order"));
        }
        prev = Some(id);
        let out_len = r.u32()? as usize;
        let in_len = r.u32()? as usize;
        let out = r.edge_vec(out_len, id)?;
        let inn = r.edge_vec(in_len, id)?;
        g.add_node(id).map_err(|_| IoError::CorruptField("node id"))?;
        stored.push((id, out, inn));
    }
    let mut prev_eid: Option<EdgeId> = None;
    for _ in 0..edge_count {
        let eid = EdgeId::new(r.u32()?);
        if prev_eid.map_or(false, |p| p >= eid) {
            return Err(IoError::CorruptField("edge table order"));
        }
        prev_eid = Some(eid);
        let src = r.node_id()?;
        let dst = r.node_id()?;
        g.add_edge_with_id(src, dst, eid)
            .map_err(|_| IoError::CountMismatch)?;
    }
    for (id, out, inn) in stored {
        if g.out_edge_slice(id) != Some(out.as_slice()) || g.in_edge_slice(id) != Some(inn.as_slice())
        {
            return Err(IoError::CountMismatch);
        }
    }
    Ok(g)
}

/// Loads a container from a complete binary image.
pub fn load_binary_bytes(buf: &[u8]) -> Result<AnyGraph, IoError> {
    let mut r = ByteReader::new(buf);
    if r.take(4)? != MAGIC {
        return Err(IoError::BadMagic);
    }
    let version = r.u32()?;
    if version != VERSION {
        return Err(IoError::BadVersion(version));
    }
    let tag = r.u8()?;
    let kind = ContainerKind::from_tag(tag).ok_or(IoError::BadContainerTag(tag))?;
    let node_count = r.u64()? as usize;
    let edge_count = r.u64()? as usize;

    match kind {
        ContainerKind::Undirected => {
            let mut g = UndirectedGraph::with_capacity(node_count);
            let mut total = 0usize;
            let mut self_loops = 0usize;
            let mut prev: Option<NodeId> = None;
            for _ in 0..node_count {
                let id = r.node_id()?;
                if prev.map_or(false, |p| p >= id) {
                    return Err(IoError::CorruptField("node order"));
                }
                prev = Some(id);
                let len = r.u32()? as usize;
                let vec = r.node_vec(len, id)?;
                total += vec.len();
                if vec.binary_search(&id).is_ok() {
                    self_loops += 1;
                }
                g.insert_record(id, vec);
            }
            if (total + self_loops) / 2 != edge_count || (total + self_loops) % 2 != 0 {
                return Err(IoError::CountMismatch);
            }
            g.set_edge_count(edge_count);
            r.finish()?;
            Ok(AnyGraph::Undirected(g))
        }
        ContainerKind::Directed => {
            let mut g = DirectedGraph::with_capacity(node_count);
            let mut total_out = 0usize;
            let mut total_in = 0usize;
            let mut prev: Option<NodeId> = None;
            for _ in 0..node_count {
                let id = r.node_id()?;
                if prev.map_or(false, |p| p >= id) {
                    return Err(IoError::CorruptField("node order"));
                }
                prev = Some(id);
                let out_len = r.u32()? as usize;
                let in_len = r.u32()? as usize;
                let out = r.node_vec(out_len, id)?;
                let inn = r.node_vec(in_len, id)?;
                total_out += out.len();
                total_in += inn.len();
                g.insert_record(id, out, inn);
            }
            if total_out != edge_count || total_in != edge_count {
                return Err(IoError::CountMismatch);
            }
            g.set_edge_count(edge_count);
            r.finish()?;
            Ok(AnyGraph::Directed(g))
        }
        ContainerKind::Multigraph => {
            let g = load_multi_from(&mut r, node_count, edge_count)?;
            r.finish()?;
            Ok(AnyGraph::Multi(g))
        }
        ContainerKind::AttrNetwork => {
            let inner = load_multi_from(&mut r, node_count, edge_count)?;
            let mut net = AttrNetwork::new();
            let node_ids = inner.node_ids();
            for &id in &node_ids {
                net.add_node(id).unwrap();
            }
            for eid in inner.edge_ids() {
                let ep = inner.edge_endpoints(eid).unwrap();
                net.add_edge_with_id(ep.src, ep.dst, eid).unwrap();
            }
            let edge_ids = net.edge_ids();
            for (kind, targets) in [
                (AttrKind::Node, node_ids.len()),
                (AttrKind::Edge, edge_ids.len()),
            ] {
                let n_cols = r.u32()? as usize;
                for _ in 0..n_cols {
                    let name_len = r.u32()? as usize;
                    let name = String::from_utf8(r.take(name_len)?.to_vec())
                        .map_err(|_| IoError::CorruptField("utf-8 string"))?;
                    let ty = read_type_tag(&mut r)?;
                    let default = read_value(&mut r, ty)?;
                    net.declare_attr(kind, &name, ty, default)
                        .map_err(IoError::Graph)?;
                    for i in 0..targets {
                        let flag = r.u8()?;
                        if flag == 1 {
                            let value = read_value(&mut r, ty)?;
                            match kind {
                                AttrKind::Node => {
                                    net.set_node_attr(node_ids[i], &name, value).unwrap()
                                }
                                AttrKind::Edge => {
                                    net.set_edge_attr(edge_ids[i], &name, value).unwrap()
                                }
                            }
                        } else if flag != 0 {
                            return Err(IoError::CorruptField("default flag"));
                        }
                    }
                }
            }
            r.finish()?;
            Ok(AnyGraph::Attr(net))
        }
    }
}

/// Reads the whole stream, then decodes it.
pub fn load_binary<R: std::io::Read>(mut r: R) -> Result<AnyGraph, IoError> {
    let mut buf = Vec::new();
    r.read_to_end(&mut buf)?;
    load_binary_bytes(&buf)
}

// ---------------------------------------------------------------------------
// edge-list text format

/// Parses the Stanford edge-list text format: '#' comment lines, blank lines
/// ignored, data lines of two integer tokens separated by tabs or spaces.
/// Nodes are created implicitly; duplicate simple-graph edges collapse.
pub fn load_edge_list<R: BufRead>(r: R, directed: bool) -> Result<AnyGraph, IoError> {
    let mut und = UndirectedGraph::new();
    let mut dir = DirectedGraph::new();
    let mut line_no = 0u64;
    for line in r.lines() {
        let line = line?;
        line_no += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(IoError::MalformedLine(line_no));
        };
        let parse = |tok: &str| -> Result<NodeId, IoError> {
            let v: i64 = tok.parse().map_err(|_| IoError::MalformedLine(line_no))?;
            if v < 0 {
                return Err(IoError::NegativeId(line_no));
            }
            NodeId::try_new(v).ok_or(IoError::MalformedLine(line_no))
        };
        let (src, dst) = (parse(a)?, parse(b)?);
        if directed {
            if !dir.is_node(src) {
                dir.add_node(src).unwrap();
            }
            if !dir.is_node(dst) {
                dir.add_node(dst).unwrap();
            }
            dir.add_edge(src, dst).unwrap();
        } else {
            if !und.is_node(src) {
                und.add_node(src).unwrap();
            }
            if !und.is_node(dst) {
                und.add_node(dst).unwrap();
            }
            und.add_edge(src, dst).unwrap();
        }
    }
    Ok(if directed {
        AnyGraph::Directed(dir)
    } else {
        AnyGraph::Undirected(und)
    })
}

/// Writes the edge-list text format: a count comment, then one
/// tab-separated `src dst` line per edge in `edges()` order.
pub fn save_edge_list<G: GraphView, W: Write>(g: &G, w: &mut W) -> Result<(), IoError> {
    writeln!(w, "# Nodes: {} Edges: {}", g.node_count(), g.edge_count())?;
    for e in g.edges() {
        writeln!(w, "{}\t{}", e.src, e.dst)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u32) -> NodeId {
        NodeId::new(v)
    }

    fn triangle() -> UndirectedGraph {
        let mut g = UndirectedGraph::new();
        for i in 0..3 {
            g.add_node(n(i)).unwrap();
        }
        g.add_edge(n(0), n(1)).unwrap();
        g.add_edge(n(0), n(2)).unwrap();
        g.add_edge(n(1), n(2)).unwrap();
        g
    }

    #[test]
    fn empty_undirected_is_25_bytes() {
        let g = UndirectedGraph::new();
        let mut buf = Vec::new();
        let len = save_undirected(&g, &mut buf).unwrap();
        assert_eq!(len, HEADER_LEN);
        assert_eq!(buf.len(), 25);
    }

    #[test]
    fn round_trip_triangle() {
        let g = triangle();
        let mut buf = Vec::new();
        save_undirected(&g, &mut buf).unwrap();
        let loaded = load_binary_bytes(&buf).unwrap();
        assert_eq!(loaded.dump(), g.dump());
    }

    #[test]
    fn saves_are_deterministic() {
        let g = triangle();
        let mut a = Vec::new();
        let mut b = Vec::new();
        save_undirected(&g, &mut a).unwrap();
        save_undirected(&g, &mut b).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_magic_detected() {
        let mut buf = Vec::new();
        save_undirected(&triangle(), &mut buf).unwrap();
        buf[0] ^= 0xff;
        assert!(matches!(load_binary_bytes(&buf), Err(IoError::BadMagic)));
    }

    #[test]
    fn bad_version_detected() {
        let mut buf = Vec::new();
        save_undirected(&triangle(), &mut buf).unwrap();
        buf[4] = 9;
        assert!(matches!(
            load_binary_bytes(&buf),
            Err(IoError::BadVersion(9))
        ));
    }

    #[test]
    fn truncation_detected() {
        let mut buf = Vec::new();
        save_undirected(&triangle(), &mut buf).unwrap();
        buf.truncate(buf.len() - 4);
        assert!(matches!(load_binary_bytes(&buf), Err(IoError::Truncated)));
    }

    #[test]
    fn count_mismatch_detected() {
        let mut buf = Vec::new();
        save_undirected(&triangle(), &mut buf).unwrap();
        buf[17] = 9; // edge count field
        assert!(matches!(
            load_binary_bytes(&buf),
            Err(IoError::CountMismatch)
        ));
    }

    #[test]
    fn unsorted_vector_detected() {
        let mut buf = Vec::new();
        save_undirected(&triangle(), &mut buf).unwrap();
        // node 0's neighbor vector is [1, 2] right after id+len; swap entries
        let base = HEADER_LEN as usize + 8;
        let (a, b) = (base, base + 4);
        for i in 0..4 {
            buf.swap(a + i, b + i);
        }
        assert!(matches!(
            load_binary_bytes(&buf),
            Err(IoError::UnsortedVector(_))
        ));
    }

    #[test]
    fn attr_round_trip() {
        let mut net = AttrNetwork::new();
        for i in 0..3 {
            net.add_node(n(i)).unwrap();
        }
        let e0 = net.add_edge_multi(n(0), n(1)).unwrap();
        net.add_edge_multi(n(0), n(1)).unwrap();
        net.declare_attr(AttrKind::Node, "age", AttrType::Int, AttrValue::Int(0))
            .unwrap();
        net.declare_attr(AttrKind::Node, "name", AttrType::Str, AttrValue::Str("".into()))
            .unwrap();
        net.declare_attr(AttrKind::Edge, "w", AttrType::Float, AttrValue::Float(1.0))
            .unwrap();
        net.set_node_attr(n(1), "age", AttrValue::Int(33)).unwrap();
        net.set_node_attr(n(2), "name", AttrValue::Str("z".into()))
            .unwrap();
        net.set_edge_attr(e0, "w", AttrValue::Float(2.5)).unwrap();

        let mut buf = Vec::new();
        save_attr_network(&net, &mut buf).unwrap();
        let AnyGraph::Attr(loaded) = load_binary_bytes(&buf).unwrap() else {
            panic!("wrong container kind");
        };
        assert_eq!(loaded.dump(), net.dump());
        assert_eq!(loaded.get_node_attr(n(1), "age").unwrap(), AttrValue::Int(33));
        assert_eq!(loaded.get_node_attr(n(0), "age").unwrap(), AttrValue::Int(0));
        assert_eq!(
            loaded.get_node_attr(n(2), "name").unwrap(),
            AttrValue::Str("z".into())
        );
        assert_eq!(
            loaded.get_edge_attr(e0, "w").unwrap(),
            AttrValue::Float(2.5)
        );

        let mut buf2 = Vec::new();
        save_attr_network(&loaded, &mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }

    #[test]
    fn edge_list_parse() {
        let text = "# c\n1 2\n2 3\n";
        let g = load_edge_list(text.as_bytes(), false).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_collapses_duplicates() {
        let g = load_edge_list("1 2\n1 2\n".as_bytes(), false).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_malformed_line() {
        assert!(matches!(
            load_edge_list("1 x\n".as_bytes(), false),
            Err(IoError::MalformedLine(1))
        ));
        assert!(matches!(
            load_edge_list("1 2\n-3 4\n".as_bytes(), true),
            Err(IoError::NegativeId(2))
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let mut g = UndirectedGraph::new();
        for i in 0..4 {
            g.add_node(n(i)).unwrap();
        }
        g.add_edge(n(0), n(3)).unwrap();
        g.add_edge(n(1), n(2)).unwrap();
        let mut text = Vec::new();
        save_edge_list(&g, &mut text).unwrap();
        let loaded = load_edge_list(text.as_slice(), false).unwrap();
        assert_eq!(loaded.dump(), g.dump());
    }

    #[test]
    fn multigraph_round_trip_preserves_edge_ids() {
        let mut g = DirectedMultigraph::new();
        for i in 0..3 {
            g.add_node(n(i)).unwrap();
        }
        let e0 = g.add_edge_multi(n(0), n(1)).unwrap();
        g.add_edge_multi(n(0), n(1)).unwrap();
        g.add_edge_multi(n(2), n(0)).unwrap();
        g.del_edge_by_id(e0).unwrap();
        let mut buf = Vec::new();
        save_multigraph(&g, &mut buf).unwrap();
        let AnyGraph::Multi(loaded) = load_binary_bytes(&buf).unwrap() else {
            panic!("wrong container kind");
        };
        assert_eq!(loaded.edge_ids(), g.edge_ids());
        assert_eq!(loaded.dump(), g.dump());
        // counter moves past the largest restored id
        let mut more = loaded.clone();
        let next = more.add_edge_multi(n(0), n(2)).unwrap();
        assert!(next.value() >= 3);
    }
}
