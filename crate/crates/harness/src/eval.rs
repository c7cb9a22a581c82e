//! One-shot evaluation of the cochains and functors on user-supplied JSON.

use cob1::bordism::Bordism;
use cob1::chain::Chain;
use cob1::cocycle::{alpha, beta_hat, gamma_with_details};
use cob1::cyclic::{from_bordism, igusa_cocycle, lambda_to_u, to_bordism, CyclicMap};
use cob1::cyclic_sign::CyclicConfiguration;
use cob1::json::rational_to_string;
use serde_json::{json, Value};

fn parse<T: serde::de::DeserializeOwned>(input: &Value) -> Result<T, String> {
    serde_json::from_value(input.clone()).map_err(|e| e.to_string())
}

fn bordism_pair(input: &Value) -> Result<(Bordism, Bordism), String> {
    let pair: Vec<Bordism> = parse(input)?;
    let [f, g] = <[Bordism; 2]>::try_from(pair)
        .map_err(|v| format!("expected exactly 2 bordisms, got {}", v.len()))?;
    Ok((f, g))
}

/// Evaluates `what` on `input`, returning the result as JSON. `k` selects
/// the cocycle degree where one applies.
pub fn eval(what: &str, input: &Value, k: usize) -> Result<Value, String> {
    let value = match what {
        "alpha" => {
            let chain: Chain = parse(input)?;
            json!(alpha(&chain).map_err(|e| e.to_string())?)
        }
        "beta" => {
            let bordism: Bordism = parse(input)?;
            json!(beta_hat(&bordism))
        }
        "gamma" => {
            let chain: Chain = parse(input)?;
            let (total, details) =
                gamma_with_details(k, &chain).map_err(|e| e.to_string())?;
            let details: Vec<Value> = details
                .iter()
                .map(|(trace, word, sign)| {
                    let crossings: Vec<Value> = trace
                        .crossings
                        .iter()
                        .map(|c| json!({"wall": c.level, "point": c.point, "sign": c.sign}))
                        .collect();
                    json!({
                        "trace": crossings,
                        "word": word,
                        "reduced_sign": rational_to_string(sign),
                    })
                })
                .collect();
            json!({"value": rational_to_string(&total), "details": details})
        }
        "igusa" => {
            let maps: Vec<CyclicMap> = parse(input)?;
            json!(rational_to_string(
                &igusa_cocycle(k, &maps).map_err(|e| e.to_string())?
            ))
        }
        "reduced-sign" => {
            let config: CyclicConfiguration = parse(input)?;
            json!(rational_to_string(
                &config.reduced_sign().map_err(|e| e.to_string())?
            ))
        }
        "averaged-sign" => {
            let config: CyclicConfiguration = parse(input)?;
            json!(rational_to_string(
                &config.averaged_sign().map_err(|e| e.to_string())?
            ))
        }
        "compose" => {
            let (f, g) = bordism_pair(input)?;
            json!(f.compose(&g).map_err(|e| e.to_string())?)
        }
        "compose-reduced" => {
            let (f, g) = bordism_pair(input)?;
            json!(f.compose_reduced(&g).map_err(|e| e.to_string())?)
        }
        "to-bordism" => {
            let f: CyclicMap = parse(input)?;
            json!(to_bordism(&f))
        }
        "from-bordism" => {
            let x: Bordism = parse(input)?;
            json!(from_bordism(&x).map_err(|e| e.to_string())?)
        }
        "lambda-to-u" => {
            let maps: Vec<CyclicMap> = parse(input)?;
            let k = if k > 0 { k } else { maps.len() / 2 };
            json!(lambda_to_u(k, &maps).map_err(|e| e.to_string())?)
        }
        other => return Err(format!("unknown evaluation {other:?}")),
    };
    Ok(value)
}
