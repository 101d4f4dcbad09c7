//! The value object returned by writhe computations.

use serde_json::{json, Value};

use super::{record_json, Chart};
use crate::curves::{NodeRecord, ProjPoint};
use crate::exact::rat::format_rat;
use crate::exact::Rat;

/// The writhe of one projection, with the per-node signs and the chart data
/// needed to reproduce them.
#[derive(Clone, Debug)]
pub struct ViroReport {
    /// `w`: the sum of all real node signs.
    pub w: i64,
    /// All double points of the projection; real ones carry their sign.
    pub records: Vec<NodeRecord>,
    pub projection_point: ProjPoint,
    /// The coordinate change placing the projection center at vertical
    /// infinity.
    pub chart: Chart,
    /// Resolution sign when the report describes a resolved nodal curve;
    /// `0` for a smooth input.
    pub c: i8,
    /// Linking term of a multi-component link, when computed.
    pub lambda: Option<Rat>,
    /// `w + lambda`, when `lambda` is present.
    pub w_lambda: Option<Rat>,
}

impl ViroReport {
    /// The real nodes with their signs.
    pub fn node_signs(&self) -> Vec<(&NodeRecord, i8)> {
        self.records.iter().filter_map(|r| r.sign.map(|s| (r, s))).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "w": self.w,
            "c": self.c,
            "projection_point": self.projection_point.to_json(),
            "chart": self.chart.to_json(),
            "nodes": self.records.iter().map(record_json).collect::<Vec<_>>(),
        });
        if let Some(l) = &self.lambda {
            obj["lambda"] = Value::String(format_rat(l));
        }
        if let Some(wl) = &self.w_lambda {
            obj["w_lambda"] = Value::String(format_rat(wl));
        }
        obj
    }
}
