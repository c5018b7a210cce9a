/** Wire types for the search backend's JSON API. */

export interface ApiResult {
  employee_id: string;
  full_name: string;
  phone: string;
  email: string;
  position_title: string;
  department: string;
  score: number;
  matched_concepts: string[];
  explanation: string;
}

export interface ApiSearchResponse {
  request_id: string;
  results: ApiResult[];
  unknown_terms: string[];
  diagnostics: string[];
}

export interface Department {
  id: string;
  name: string;
}

export interface EmployeeCard {
  id: string;
  full_name: string;
  phone: string;
  email: string;
  position_title: string;
  department: string;
}
