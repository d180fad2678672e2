//! A fail-closed validator for the published report schema, shared by the
//! schema and CLI test targets.
//!
//! It covers exactly the subset of JSON Schema the published document uses:
//! an unknown keyword or unsupported pattern is a test failure, not a silent
//! pass.

#![allow(dead_code)] // not every test target exercises every helper

use serde_json::Value;

pub struct Validator {
    root: Value,
}

type Outcome = Result<(), String>;

impl Validator {
    pub fn load() -> Validator {
        let text = std::fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../../schemas/report.schema.json"
        ))
        .expect("schema file is part of the repository");
        Validator { root: serde_json::from_str(&text).expect("schema is valid JSON") }
    }

    fn resolve(&self, reference: &str) -> &Value {
        let path = reference
            .strip_prefix("#/")
            .unwrap_or_else(|| panic!("only local references are supported, got {reference}"));
        let mut node = &self.root;
        for step in path.split('/') {
            node = node
                .get(step)
                .unwrap_or_else(|| panic!("dangling reference {reference} at step {step}"));
        }
        node
    }

    pub fn check_root(&self, value: &Value) -> Outcome {
        let root = self.root.clone();
        self.check(&root, value, "$")
    }

    fn check(&self, schema: &Value, value: &Value, path: &str) -> Outcome {
        let schema = schema.as_object().expect("every schema node is an object");
        for (keyword, rule) in schema {
            match keyword.as_str() {
                "$schema" | "$id" | "$defs" | "title" | "description" => {}
                "$ref" => {
                    let target = self.resolve(rule.as_str().expect("$ref is a string")).clone();
                    self.check(&target, value, path)?;
                }
                "oneOf" => {
                    let branches = rule.as_array().expect("oneOf is an array");
                    let passing = branches
                        .iter()
                        .filter(|branch| self.check(branch, value, path).is_ok())
                        .count();
                    if passing != 1 {
                        return Err(format!("{path}: {passing} of {} oneOf branches match", branches.len()));
                    }
                }
                "type" => check_type(rule, value, path)?,
                "const" => {
                    if value != rule {
                        return Err(format!("{path}: expected constant {rule}, got {value}"));
                    }
                }
                "enum" => {
                    let options = rule.as_array().expect("enum is an array");
                    if !options.contains(value) {
                        return Err(format!("{path}: {value} is not one of {rule}"));
                    }
                }
                "properties" | "required" | "additionalProperties" => {
                    // handled together below once, keyed off "properties"
                    if keyword == "properties" {
                        self.check_object(schema, rule, value, path)?;
                    }
                }
                "items" => {
                    if let Some(items) = value.as_array() {
                        for (i, item) in items.iter().enumerate() {
                            self.check(rule, item, &format!("{path}[{i}]"))?;
                        }
                    }
                }
                "minItems" => {
                    if let Some(items) = value.as_array() {
                        let min = rule.as_u64().expect("minItems is a number") as usize;
                        if items.len() < min {
                            return Err(format!("{path}: fewer than {min} items"));
                        }
                    }
                }
                "maxItems" => {
                    if let Some(items) = value.as_array() {
                        let max = rule.as_u64().expect("maxItems is a number") as usize;
                        if items.len() > max {
                            return Err(format!("{path}: more than {max} items"));
                        }
                    }
                }
                "minimum" => {
                    if let Some(n) = value.as_f64() {
                        let min = rule.as_f64().expect("minimum is a number");
                        if n < min {
                            return Err(format!("{path}: {n} is below the minimum {min}"));
                        }
                    }
                }
                "pattern" => {
                    if let Some(s) = value.as_str() {
                        check_pattern(rule.as_str().expect("pattern is a string"), s, path)?;
                    }
                }
                other => panic!("schema keyword `{other}` is not supported by this validator"),
            }
        }
        Ok(())
    }

    fn check_object(&self, schema: &serde_json::Map<String, Value>, properties: &Value, value: &Value, path: &str) -> Outcome {
        let Some(object) = value.as_object() else {
            return Err(format!("{path}: expected an object, got {value}"));
        };
        let properties = properties.as_object().expect("properties is an object");
        if let Some(required) = schema.get("required") {
            for name in required.as_array().expect("required is an array") {
                let name = name.as_str().expect("required names are strings");
                if !object.contains_key(name) {
                    return Err(format!("{path}: missing required member `{name}`"));
                }
            }
        }
        for (name, member) in object {
            let child = format!("{path}.{name}");
            match properties.get(name) {
                Some(sub) => self.check(sub, member, &child)?,
                None => match schema.get("additionalProperties") {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{child}: member not allowed by the schema"));
                    }
                    Some(Value::Bool(true)) | None => {}
                    Some(sub) => self.check(sub, member, &child)?,
                },
            }
        }
        Ok(())
    }
}

fn check_type(rule: &Value, value: &Value, path: &str) -> Outcome {
    let names: Vec<&str> = match rule {
        Value::String(s) => vec![s.as_str()],
        Value::Array(list) => list.iter().map(|v| v.as_str().expect("type names are strings")).collect(),
        other => panic!("unsupported type rule {other}"),
    };
    let matches = names.iter().any(|name| match *name {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        "integer" => value.as_i64().is_some() || value.as_u64().is_some(),
        "number" => value.is_number(),
        other => panic!("unsupported type name {other}"),
    });
    if matches {
        Ok(())
    } else {
        Err(format!("{path}: {value} does not have type {rule}"))
    }
}

/// Supports exactly the anchored character-class-with-count shape used by the
/// published schema, e.g. `^[0-9a-f]{64}$`.
fn check_pattern(pattern: &str, value: &str, path: &str) -> Outcome {
    let body = pattern
        .strip_prefix("^[")
        .and_then(|rest| rest.split_once("]{"))
        .and_then(|(class, tail)| tail.strip_suffix("}$").map(|count| (class, count)))
        .unwrap_or_else(|| panic!("pattern `{pattern}` is not supported by this validator"));
    let (class, count) = body;
    let count: usize = count.parse().expect("pattern count is a number");
    let mut allowed = Vec::new();
    let mut chars = class.chars().peekable();
    while let Some(c) = chars.next() {
        if chars.peek() == Some(&'-') {
            let mut clone = chars.clone();
            clone.next();
            if let Some(&end) = clone.peek() {
                chars.next();
                chars.next();
                allowed.extend(c..=end);
                continue;
            }
        }
        allowed.push(c);
    }
    if value.chars().count() != count {
        return Err(format!("{path}: expected {count} characters, got {}", value.chars().count()));
    }
    if let Some(bad) = value.chars().find(|c| !allowed.contains(c)) {
        return Err(format!("{path}: character `{bad}` is outside [{class}]"));
    }
    Ok(())
}

pub fn assert_valid(v: &Validator, report: &Value) {
    if let Err(e) = v.check_root(report) {
        panic!("report failed schema validation: {e}\n{report:#}");
    }
}
