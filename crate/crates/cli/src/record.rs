use serde::Serialize;

pub const TOOL: &str = "hecke";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A self-describing result: the query echo plus the payload.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub query: Query,
    /// Label and element lists are in the library's canonical order.
    pub canonical_order: bool,
    pub result: Payload,
}

impl OutputRecord {
    pub fn new(command: &'static str, query: Query, result: Payload) -> Self {
        Self {
            tool: TOOL,
            version: VERSION,
            command,
            query,
            canonical_order: true,
            result,
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Query {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(rename = "char", skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irr: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mp: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dump_h: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Labels {
        labels: Vec<String>,
        /// Type D with even e: which orderings of each pair passed.
        #[serde(skip_serializing_if = "Option::is_none")]
        orientations: Option<Vec<Option<String>>>,
        degenerate_rank: bool,
    },
    Count {
        count: usize,
        degenerate_rank: bool,
    },
    Membership {
        member: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        violation: Option<String>,
    },
    AValues {
        a_values: Vec<AValueRow>,
    },
    HTable {
        h: Vec<HRow>,
    },
    PhiIdentity {
        e: usize,
        factorization_holds: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        negation_holds: Option<bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        sign: Option<i8>,
        lhs_degree: usize,
        rhs_degree: usize,
    },
    E {
        /// `None` in the semisimple case.
        e: Option<u64>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct AValueRow {
    pub element: String,
    pub length: usize,
    pub a: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct HRow {
    pub x: String,
    pub y: String,
    pub z: String,
    /// Sparse `exp:coeff` pairs.
    pub h: String,
}
