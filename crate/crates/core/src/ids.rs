use std::fmt;

/// Node identifier. Non-negative, unique within a container, not required to
/// be contiguous. Values are constrained to 31 bits so adjacency entries pack
/// into 32-bit words on disk and in memory.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeId(u32);

impl NodeId {
    pub const MAX_VALUE: u32 = (1 << 31) - 1;

    /// Panics if `value` does not fit in 31 bits.
    pub fn new(value: u32) -> Self {
        assert!(value <= Self::MAX_VALUE, "node id {value} exceeds 31 bits");
        NodeId(value)
    }

    pub fn try_new(value: i64) -> Option<Self> {
        if (0..=Self::MAX_VALUE as i64).contains(&value) {
            Some(NodeId(value as u32))
        } else {
            None
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Edge identifier for multigraphs. Assigned by a monotonically increasing
/// per-container counter and never reused after deletion.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(u32);

impl EdgeId {
    pub fn new(value: u32) -> Self {
        EdgeId(value)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
