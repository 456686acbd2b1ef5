//! JSON form of a prime family.

use serde::{Deserialize, Serialize};

use super::{ConditionFlag, Conditions, ContainmentOracle, PrimeFamily};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDoc {
    name: String,
    m: usize,
    heights: Vec<u32>,
    e_matrix: Vec<Vec<u32>>,
    conditions: Conditions,
    containment_oracle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

impl PrimeFamily {
    /// Canonical pretty-printed JSON; `from_json(to_json(f)) == f` and the
    /// text itself round-trips byte for byte.
    pub fn to_json(&self) -> String {
        let doc = FamilyDoc {
            name: self.name.clone(),
            m: self.m(),
            heights: self.heights.clone(),
            e_matrix: self.e_matrix.clone(),
            conditions: self.conditions.clone(),
            containment_oracle: self.containment_oracle.map(|o| o.name().to_string()),
            provenance: self.provenance.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("family serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FamilyDoc = serde_json::from_str(text).map_err(|e| Error::Config(format!("family JSON: {e}")))?;
        if doc.m != doc.heights.len() {
            return Err(Error::Config(format!(
                "m = {} but {} heights given",
                doc.m,
                doc.heights.len()
            )));
        }
        let oracle = doc.containment_oracle.as_deref().map(ContainmentOracle::from_name).transpose()?;
        let mut family = PrimeFamily::new(doc.name, doc.heights, doc.e_matrix, doc.conditions, oracle)
            .map_err(|e| Error::Config(e.to_string()))?;
        family.provenance = doc.provenance;
        let c = &family.conditions;
        let claims_verified = [&c.a, &c.a_plus, &c.b].iter().any(|f| **f == ConditionFlag::Verified);
        if claims_verified && !family.verification_backed() {
            return Err(Error::Config(format!(
                "family {} claims a verified condition that no routine in this crate verifies",
                family.name
            )));
        }
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::preset_generic;
    use crate::monomial::monomial_family;

    #[test]
    fn text_round_trip_is_exact() {
        for family in [monomial_family(3).unwrap(), preset_generic(2, 3).unwrap()] {
            let text = family.to_json();
            let back = PrimeFamily::from_json(&text).unwrap();
            assert_eq!(back, family);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn schema_fields() {
        let value: serde_json::Value = serde_json::from_str(&preset_generic(2, 3).unwrap().to_json()).unwrap();
        assert_eq!(value["m"], 2);
        assert_eq!(value["heights"], serde_json::json!([6, 2]));
        assert_eq!(value["e_matrix"], serde_json::json!([[1, 2], [0, 1]]));
        assert_eq!(value["conditions"]["A_plus"]["status"], "asserted_from_literature");
        assert_eq!(value["containment_oracle"], "gamma");
    }

    #[test]
    fn rejects_inconsistent_documents() {
        let text = preset_generic(2, 3).unwrap().to_json().replace("\"m\": 2", "\"m\": 3");
        assert!(matches!(PrimeFamily::from_json(&text), Err(Error::Config(_))));
        let text = preset_generic(2, 3).unwrap().to_json().replace("\"gamma\"", "\"magic\"");
        assert!(matches!(PrimeFamily::from_json(&text), Err(Error::Config(_))));
        assert!(PrimeFamily::from_json("{").is_err());
    }

    #[test]
    fn verified_flags_need_a_backing_routine() {
        let mut value: serde_json::Value = serde_json::from_str(&preset_generic(2, 3).unwrap().to_json()).unwrap();
        value["conditions"]["A"] = serde_json::json!({"status": "verified"});
        assert!(matches!(PrimeFamily::from_json(&value.to_string()), Err(Error::Config(_))));
        let mono = monomial_family(2).unwrap().to_json();
        assert!(mono.contains("\"verified\""));
        assert!(PrimeFamily::from_json(&mono).is_ok());
    }
}
