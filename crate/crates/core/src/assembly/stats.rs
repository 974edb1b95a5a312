use std::fmt::Write as _;

use num_rational::Ratio;

use crate::model::Ontology;
use crate::rdfxml::serialize_with_layout;

/// Counts and sizes of one ontology, optionally relative to a reference.
///
/// Both renderings list the fields in this order: `classes`,
/// `object_properties`, `datatype_properties`, `individuals`, `assertions`,
/// `bytes`, `instance_bytes`, then `reduction_ratio` and
/// `instance_ratio` when a reference was given. Ratios are reduced
/// fractions `n/d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentReport {
    pub class_count: usize,
    pub object_property_count: usize,
    pub datatype_property_count: usize,
    pub individual_count: usize,
    pub assertion_count: usize,
    /// Length of the canonical serialization.
    pub serialized_bytes: u64,
    /// Length of the individuals section of that serialization.
    pub instance_bytes: u64,
    /// `serialized_bytes` over the reference's.
    pub reduction_ratio: Option<Ratio<u64>>,
    /// `instance_bytes` over the reference's; `None` when the reference has
    /// no individuals.
    pub instance_ratio: Option<Ratio<u64>>,
}

impl SegmentReport {
    fn fields(&self) -> Vec<(&'static str, String)> {
        let mut v = vec![
            ("classes", self.class_count.to_string()),
            ("object_properties", self.object_property_count.to_string()),
            (
                "datatype_properties",
                self.datatype_property_count.to_string(),
            ),
            ("individuals", self.individual_count.to_string()),
            ("assertions", self.assertion_count.to_string()),
            ("bytes", self.serialized_bytes.to_string()),
            ("instance_bytes", self.instance_bytes.to_string()),
        ];
        if let Some(r) = self.reduction_ratio {
            v.push(("reduction_ratio", r.to_string()));
        }
        if let Some(r) = self.instance_ratio {
            v.push(("instance_ratio", r.to_string()));
        }
        v
    }

    /// `classes=10 object_properties=12 ...` on one line.
    pub fn to_line(&self) -> String {
        self.fields()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// One `key=value` per line.
    pub fn to_key_values(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(s, "{k}={v}");
        }
        s
    }
}

pub fn stats(segment: &Ontology, reference: Option<&Ontology>) -> SegmentReport {
    let (bytes, layout) = serialize_with_layout(segment);
    let serialized_bytes = bytes.len() as u64;
    let instance_bytes = layout.individuals.len() as u64;
    let (reduction_ratio, instance_ratio) = match reference {
        Some(r) => {
            let (rb, rl) = serialize_with_layout(r);
            let ri = rl.individuals.len() as u64;
            (
                Some(Ratio::new(serialized_bytes, rb.len() as u64)),
                (ri > 0).then(|| Ratio::new(instance_bytes, ri)),
            )
        }
        None => (None, None),
    };
    SegmentReport {
        class_count: segment.classes().len(),
        object_property_count: segment.object_properties().len(),
        datatype_property_count: segment.datatype_properties().len(),
        individual_count: segment.individuals().len(),
        assertion_count: segment.assertion_count(),
        serialized_bytes,
        instance_bytes,
        reduction_ratio,
        instance_ratio,
    }
}
