//! Read-only HTTP/JSON service.

use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use twobytwo::chart::{layout_complete, layout_strict, render_svg, Which};
use twobytwo::topology::TopologyError;
use twobytwo::{census, shortest_path, Atlas, CostModel, FamilyCensus, Goal, MoveSet};

use crate::record::{self, PathRecord};

/// Everything the handlers read. Built once, never mutated.
pub struct Service {
    pub atlas: Atlas,
    census_strict: FamilyCensus,
    census_complete: FamilyCensus,
    chart_strict: String,
    chart_complete: String,
}

impl Service {
    /// Builds the atlas and derived tables, failing when the self-check does.
    pub fn build() -> Result<Service, String> {
        let atlas = Atlas::build(twobytwo::Equivalence::Interchange);
        record::self_check(&atlas)?;
        let strict = atlas.strict_games();
        Ok(Service {
            census_strict: census(strict.iter()),
            census_complete: census(atlas.games().iter()),
            chart_strict: render_svg(&layout_strict(&atlas)),
            chart_complete: render_svg(&layout_complete(&atlas)),
            atlas,
        })
    }
}

pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> ApiError {
        ApiError {
            status,
            message: message.into(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = serde_json::json!({ "error": self.message, "status": self.status.as_u16() });
        (self.status, Json(body)).into_response()
    }
}

type Shared = Arc<Service>;
type ApiResult<T> = Result<T, ApiError>;

pub fn router(service: Shared) -> Router {
    Router::new()
        .route("/api/games/{key}", get(game))
        .route("/api/games/{key}/neighbors", get(game_neighbors))
        .route("/api/games/{key}/classification", get(game_classification))
        .route("/api/path", post(path))
        .route("/api/census", get(census_table))
        .route("/api/chart.svg", get(chart))
        .with_state(service)
}

fn find(service: &Service, key: &str) -> ApiResult<twobytwo::Game> {
    record::lookup(&service.atlas, key)
        .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("unknown game {key:?}")))
}

fn bad_request(message: impl Into<String>) -> ApiError {
    ApiError::new(StatusCode::BAD_REQUEST, message)
}

async fn game(State(s): State<Shared>, Path(key): Path<String>) -> ApiResult<Response> {
    let g = find(&s, &key)?;
    Ok(Json(record::game_record(&s.atlas, &g).expect("atlas game")).into_response())
}

#[derive(Deserialize)]
struct MovesQuery {
    moves: Option<String>,
}

fn move_set(text: Option<&str>) -> ApiResult<MoveSet> {
    match text {
        None | Some("") => Ok(MoveSet::ADJACENT),
        Some(t) => t.parse().map_err(bad_request),
    }
}

async fn game_neighbors(
    State(s): State<Shared>,
    Path(key): Path<String>,
    Query(q): Query<MovesQuery>,
) -> ApiResult<Response> {
    let g = find(&s, &key)?;
    let moves = move_set(q.moves.as_deref())?;
    Ok(Json(record::neighbor_records(&s.atlas, &g, moves)).into_response())
}

async fn game_classification(
    State(s): State<Shared>,
    Path(key): Path<String>,
) -> ApiResult<Response> {
    let g = find(&s, &key)?;
    Ok(Json(twobytwo::classify(&g)).into_response())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PathRequest {
    from: String,
    goal: String,
    moves: Option<String>,
    costs: Option<String>,
}

async fn path(State(s): State<Shared>, body: Bytes) -> ApiResult<Response> {
    let req: PathRequest = serde_json::from_slice(&body)
        .map_err(|e| bad_request(format!("malformed request: {e}")))?;
    let goal: Goal = req
        .goal
        .parse()
        .map_err(|e: TopologyError| bad_request(e.to_string()))?;
    let moves = move_set(req.moves.as_deref())?;
    let costs: CostModel = match req.costs.as_deref() {
        None | Some("") => CostModel::Uniform,
        Some(c) => c.parse().map_err(bad_request)?,
    };
    let from = find(&s, &req.from)?;
    match shortest_path(&from, &goal, moves, costs) {
        Ok(p) => Ok(Json(PathRecord::new(&s.atlas, &p, &goal, moves, costs)).into_response()),
        Err(e @ TopologyError::NoPath { .. }) => Err(ApiError::new(
            StatusCode::UNPROCESSABLE_ENTITY,
            e.to_string(),
        )),
        Err(e) => Err(bad_request(e.to_string())),
    }
}

#[derive(Deserialize)]
struct CensusQuery {
    set: Option<String>,
}

async fn census_table(
    State(s): State<Shared>,
    Query(q): Query<CensusQuery>,
) -> ApiResult<Response> {
    let table = match q.set.as_deref().unwrap_or("strict") {
        "strict" => &s.census_strict,
        "complete" | "all" => &s.census_complete,
        other => return Err(bad_request(format!("unknown set {other:?}"))),
    };
    Ok(Json(table).into_response())
}

#[derive(Deserialize)]
struct ChartQuery {
    which: Option<String>,
}

async fn chart(State(s): State<Shared>, Query(q): Query<ChartQuery>) -> ApiResult<Response> {
    let which: Which = q
        .which
        .as_deref()
        .unwrap_or("strict")
        .parse()
        .map_err(bad_request)?;
    let svg = match which {
        Which::Strict => s.chart_strict.clone(),
        Which::Complete => s.chart_complete.clone(),
    };
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], svg).into_response())
}

/// Serves until the process is stopped.
pub async fn serve(service: Service, port: u16) -> std::io::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(Arc::new(service))).await
}
