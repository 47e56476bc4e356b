//! Foliation files: `{"vars": [...], "field": "QQ", "generators": [{var: poly}, ...]}`.

use folcore::foliation::FoliationPresentation;
use folcore::vector_field::VectorField;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::CliError;
use crate::parse::{is_identifier, parse_polynomial, PolyError};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoliationFile {
    pub vars: Vec<String>,
    pub field: String,
    pub generators: Vec<Map<String, Value>>,
}

impl FoliationFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_presentation(&self) -> Result<FoliationPresentation, CliError> {
        if self.field != "QQ" {
            return Err(CliError::BadField(self.field.clone()));
        }
        check_vars(&self.vars)?;
        let mut generators = Vec::with_capacity(self.generators.len());
        for (g, record) in self.generators.iter().enumerate() {
            if let Some(name) = record.keys().find(|k| !self.vars.contains(k)) {
                return Err(CliError::UnknownVariable { name: name.clone(), generator: g + 1, component: None });
            }
            let mut coeffs = Vec::with_capacity(self.vars.len());
            for v in &self.vars {
                let text = match record.get(v) {
                    Some(Value::String(s)) => s,
                    Some(_) => {
                        return Err(CliError::Usage(format!("generator {}: component {} is not a string", g + 1, v)))
                    }
                    None => return Err(CliError::Usage(format!("generator {}: missing component {}", g + 1, v))),
                };
                let p = parse_polynomial(text, &self.vars).map_err(|e| match e {
                    PolyError::Syntax { line, column, message } => {
                        CliError::Parse { generator: g + 1, component: v.clone(), line, column, message }
                    }
                    PolyError::UnknownVariable { name, .. } => {
                        CliError::UnknownVariable { name, generator: g + 1, component: Some(v.clone()) }
                    }
                })?;
                coeffs.push(p);
            }
            generators.push(VectorField::new(coeffs)?);
        }
        Ok(FoliationPresentation::new(self.vars.clone(), generators)?)
    }

    pub fn from_presentation(f: &FoliationPresentation) -> Self {
        let vars = f.vars().to_vec();
        let generators = f.generators().iter().map(|x| field_record(x, &vars)).collect();
        FoliationFile { vars, field: "QQ".into(), generators }
    }
}

pub fn check_vars(vars: &[String]) -> Result<(), CliError> {
    if vars.is_empty() {
        return Err(CliError::Usage("no variables declared".into()));
    }
    for (i, v) in vars.iter().enumerate() {
        if !is_identifier(v) {
            return Err(CliError::Usage(format!("'{}' is not a valid variable name", v)));
        }
        if vars[..i].contains(v) {
            return Err(CliError::Usage(format!("variable '{}' declared twice", v)));
        }
    }
    Ok(())
}

/// `{var: coefficient}` in declaration order.
pub fn field_record(x: &VectorField, vars: &[String]) -> Map<String, Value> {
    vars.iter().zip(x.coefficients()).map(|(v, p)| (v.clone(), Value::String(p.to_string_with(vars)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_generator_file() {
        let f = FoliationFile::from_json(
            r#"{"vars":["x","y"],"field":"QQ","generators":[{"x":"x","y":"0"},{"x":"0","y":"y"}]}"#,
        )
        .unwrap();
        let p = f.to_presentation().unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(FoliationFile::from_presentation(&p), f);
    }

    #[test]
    fn rejections() {
        let unknown = r#"{"vars":["x","y"],"field":"QQ","generators":[{"x":"x","z":"0"}]}"#;
        assert!(matches!(
            FoliationFile::from_json(unknown).unwrap().to_presentation(),
            Err(CliError::UnknownVariable { generator: 1, .. })
        ));
        let field = r#"{"vars":["x"],"field":"RR","generators":[{"x":"x"}]}"#;
        assert!(matches!(FoliationFile::from_json(field).unwrap().to_presentation(), Err(CliError::BadField(_))));
        let pow = r#"{"vars":["x"],"field":"QQ","generators":[{"x":"x**2"}]}"#;
        assert!(matches!(
            FoliationFile::from_json(pow).unwrap().to_presentation(),
            Err(CliError::Parse { generator: 1, line: 1, column: 3, .. })
        ));
        assert!(matches!(FoliationFile::from_json("{\"vars\": [}"), Err(CliError::Json { line: 1, .. })));
    }
}
