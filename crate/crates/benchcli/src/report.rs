//! CSV benchmark reports with a stable schema for regression testing.

/// Column order is part of the CLI contract; tests assert on it verbatim.
pub const CSV_HEADER: &str = "suite,operation,container,n,m,repeats,seed,prng,mean_seconds,peak_bytes,bytes_per_node,bytes_per_edge,notes";

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub suite: &'static str,
    pub operation: String,
    pub container: &'static str,
    pub n: usize,
    pub m: usize,
    pub repeats: usize,
    pub seed: u64,
    pub mean_seconds: f64,
    pub peak_bytes: Option<u64>,
    pub bytes_per_node: Option<f64>,
    pub bytes_per_edge: Option<f64>,
    pub notes: String,
}

impl BenchReport {
    pub fn csv_row(&self) -> String {
        let opt_u = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        let opt_f = |v: Option<f64>| v.map(|x| format!("{x:.2}")).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{:.9},{},{},{},{}",
            self.suite,
            self.operation,
            self.container,
            self.n,
            self.m,
            self.repeats,
            self.seed,
            graph_core::PRNG_NAME,
            self.mean_seconds,
            opt_u(self.peak_bytes),
            opt_f(self.bytes_per_node),
            opt_f(self.bytes_per_edge),
            self.notes,
        )
    }
}
