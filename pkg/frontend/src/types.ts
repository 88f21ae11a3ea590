/** Wire types for the HTTP JSON API. Rationals travel as "p/q" strings. */

export type Rational = string;
export type PointPair = [Rational, Rational];

export interface ConfigDocument {
  rect: { width: Rational; height: Rational };
  white: PointPair[];
  black?: PointPair[];
  metadata?: Record<string, unknown>;
}

export interface ScalarPair {
  exact: Rational;
  decimal: number;
}

export interface CellJson {
  site: PointPair;
  site_decimal: [number, number];
  area: ScalarPair;
  vertices: PointPair[][];
  vertices_decimal: [number, number][][];
}

export interface DiagramJson {
  rect: { width: Rational; height: Rational };
  cells: CellJson[];
  neutral_area: ScalarPair;
  neutral: [number, number][][];
}

export interface ScoreJson {
  white: Rational;
  black: Rational;
  neutral: Rational;
  white_decimal: number;
  black_decimal: number;
  neutral_decimal: number;
  winner: "white" | "black" | "tie";
}

export interface PointsJson {
  exact: PointPair[];
  decimal: [number, number][];
}

export interface RespondJson {
  certificate: "halving-attack" | "winning-point-plus-steals" | "best-tie-attempt";
  black: PointsJson;
  score: ScoreJson;
  diagram: DiagramJson;
  svg: string;
}

export interface BalanceJson {
  balanced: boolean;
  target: ScalarPair;
  worst_deviation: ScalarPair;
  half_areas: Record<string, ScalarPair>[];
  diagram: DiagramJson;
}

export interface ApiError {
  code: string;
  message: string;
}
