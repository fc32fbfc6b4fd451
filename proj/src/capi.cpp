#include "arcmatch/arcmatch.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "arcmatch/certificate.hpp"
#include "arcmatch/core.hpp"
#include "arcmatch/enumeration.hpp"
#include "arcmatch/patterns.hpp"
#include "arcmatch/pins.hpp"
#include "arcmatch/ramsey.hpp"
#include "arcmatch/svg.hpp"
#include "arcmatch/text.hpp"
#include "json.hpp"

struct am_matching {
  arcmatch::Matching value;
};

struct am_stream {
  arcmatch::MatchingStream value;
};

namespace {

using namespace arcmatch;
using nlohmann::json;

thread_local std::string last_error;
thread_local long last_detail = 0;

am_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return AM_ERR_DUPLICATE_VERTEX;
    case ErrorCode::SelfLoop: return AM_ERR_SELF_LOOP;
    case ErrorCode::GapInVertexSet: return AM_ERR_GAP_IN_VERTEX_SET;
    case ErrorCode::VertexOutOfRange: return AM_ERR_VERTEX_OUT_OF_RANGE;
    case ErrorCode::SharedVertex: return AM_ERR_SHARED_VERTEX;
    case ErrorCode::UnknownEdge: return AM_ERR_UNKNOWN_EDGE;
    case ErrorCode::EmptySegment: return AM_ERR_EMPTY_SEGMENT;
    case ErrorCode::DuplicatePin: return AM_ERR_DUPLICATE_PIN;
    case ErrorCode::NotIndecomposable: return AM_ERR_NOT_INDECOMPOSABLE;
    case ErrorCode::NotRightReaching: return AM_ERR_NOT_RIGHT_REACHING;
    case ErrorCode::SizeTooSmall: return AM_ERR_SIZE_TOO_SMALL;
    case ErrorCode::DuplicateValue: return AM_ERR_DUPLICATE_VALUE;
    case ErrorCode::InsufficientCrossers: return AM_ERR_INSUFFICIENT_CROSSERS;
    case ErrorCode::SizeCapExceeded: return AM_ERR_SIZE_CAP_EXCEEDED;
    case ErrorCode::ParseError: return AM_ERR_PARSE;
    case ErrorCode::EmptyMatching: return AM_ERR_EMPTY_MATCHING;
    case ErrorCode::InvalidCertificate: return AM_ERR_INVALID_CERTIFICATE;
    case ErrorCode::Internal: return AM_ERR_INTERNAL;
  }
  return AM_ERR_INTERNAL;
}

am_status fail(am_status status, std::string message, long detail = 0) {
  last_error = std::move(message);
  last_detail = detail;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
am_status guarded(F&& body) {
  try {
    last_error.clear();
    last_detail = 0;
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what(), e.detail().value_or(0));
  } catch (const std::bad_alloc&) {
    return fail(AM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_edges(std::span<const Edge> edges, int32_t** out, size_t* pair_count) {
  *pair_count = edges.size();
  *out = static_cast<int32_t*>(std::malloc(std::max<std::size_t>(1, 2 * edges.size()) * sizeof(int32_t)));
  if (!*out) throw std::bad_alloc();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    (*out)[2 * i] = edges[i].left;
    (*out)[2 * i + 1] = edges[i].right;
  }
}

std::vector<Edge> read_edges(const int32_t* flat, size_t pair_count) {
  std::vector<Edge> out;
  for (size_t i = 0; i < pair_count; ++i) {
    const int32_t a = flat[2 * i], b = flat[2 * i + 1];
    out.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  return out;
}

bool valid_kind(am_pattern_kind kind) { return kind >= AM_PATTERN_INTERLEAVING && kind <= AM_PATTERN_NESTING; }

json bounds_json(const Bounds& b) {
  return {{"k", b.k},
          {"stated", b.stated.str()},
          {"crossing_threshold", b.crossing_threshold.str()},
          {"tree_bound", b.tree_bound.str()}};
}

}  // namespace

#define AM_REQUIRE(cond) \
  if (!(cond)) return fail(AM_ERR_INVALID_ARGUMENT, "invalid argument: " #cond)

extern "C" {

const char* am_version(void) { return "1.0.0"; }

const char* am_status_name(am_status status) {
  switch (status) {
    case AM_OK: return "ok";
    case AM_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case AM_ERR_DUPLICATE_VERTEX: return to_string(ErrorCode::DuplicateVertex);
    case AM_ERR_SELF_LOOP: return to_string(ErrorCode::SelfLoop);
    case AM_ERR_GAP_IN_VERTEX_SET: return to_string(ErrorCode::GapInVertexSet);
    case AM_ERR_VERTEX_OUT_OF_RANGE: return to_string(ErrorCode::VertexOutOfRange);
    case AM_ERR_SHARED_VERTEX: return to_string(ErrorCode::SharedVertex);
    case AM_ERR_UNKNOWN_EDGE: return to_string(ErrorCode::UnknownEdge);
    case AM_ERR_EMPTY_SEGMENT: return to_string(ErrorCode::EmptySegment);
    case AM_ERR_DUPLICATE_PIN: return to_string(ErrorCode::DuplicatePin);
    case AM_ERR_NOT_INDECOMPOSABLE: return to_string(ErrorCode::NotIndecomposable);
    case AM_ERR_NOT_RIGHT_REACHING: return to_string(ErrorCode::NotRightReaching);
    case AM_ERR_SIZE_TOO_SMALL: return to_string(ErrorCode::SizeTooSmall);
    case AM_ERR_DUPLICATE_VALUE: return to_string(ErrorCode::DuplicateValue);
    case AM_ERR_INSUFFICIENT_CROSSERS: return to_string(ErrorCode::InsufficientCrossers);
    case AM_ERR_SIZE_CAP_EXCEEDED: return to_string(ErrorCode::SizeCapExceeded);
    case AM_ERR_PARSE: return to_string(ErrorCode::ParseError);
    case AM_ERR_EMPTY_MATCHING: return to_string(ErrorCode::EmptyMatching);
    case AM_ERR_INVALID_CERTIFICATE: return to_string(ErrorCode::InvalidCertificate);
    case AM_ERR_INTERNAL: return to_string(ErrorCode::Internal);
  }
  return "Unknown";
}

const char* am_last_error(void) { return last_error.c_str(); }
long am_last_error_detail(void) { return last_detail; }
void am_free(void* ptr) { std::free(ptr); }

// ---------------------------------------------------------------------------

am_status am_matching_from_pairs(const int32_t* vertices, size_t pair_count, am_matching** out) {
  AM_REQUIRE(out && (vertices || pair_count == 0));
  return guarded([&] {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (size_t i = 0; i < pair_count; ++i) pairs.emplace_back(vertices[2 * i], vertices[2 * i + 1]);
    *out = new am_matching{make_matching(pairs)};
    return AM_OK;
  });
}

am_status am_matching_parse(const char* text, am_matching** out) {
  AM_REQUIRE(text && out);
  return guarded([&] {
    *out = new am_matching{parse_matching(text)};
    return AM_OK;
  });
}

void am_matching_free(am_matching* m) { delete m; }

size_t am_matching_edge_count(const am_matching* m) { return m ? m->value.edge_count() : 0; }

am_status am_matching_partner(const am_matching* m, int32_t v, int32_t* out) {
  AM_REQUIRE(m && out);
  return guarded([&] {
    *out = m->value.partner(v);
    return AM_OK;
  });
}

am_status am_matching_edges(const am_matching* m, int32_t** out, size_t* pair_count) {
  AM_REQUIRE(m && out && pair_count);
  return guarded([&] {
    copy_edges(m->value.edges(), out, pair_count);
    return AM_OK;
  });
}

am_status am_matching_format(const am_matching* m, am_text_form form, char** out) {
  AM_REQUIRE(m && out && (form == AM_FORM_EDGE_LIST || form == AM_FORM_CHORD_WORD));
  return guarded([&] {
    *out = copy_string(format_matching(m->value, form == AM_FORM_EDGE_LIST ? TextForm::EdgeList : TextForm::ChordWord));
    return AM_OK;
  });
}

am_status am_matching_equal(const am_matching* a, const am_matching* b, int* out) {
  AM_REQUIRE(a && b && out);
  *out = a->value == b->value;
  return AM_OK;
}

am_status am_is_indecomposable(const am_matching* m, int* out) {
  AM_REQUIRE(m && out);
  return guarded([&] {
    *out = is_indecomposable(m->value) ? 1 : 0;
    return AM_OK;
  });
}

am_status am_find_intervals(const am_matching* m, int32_t** out, size_t* count) {
  AM_REQUIRE(m && out && count);
  return guarded([&] {
    std::vector<Edge> flat;
    for (const auto& s : find_intervals(m->value)) flat.push_back({s.lo(), s.hi()});
    copy_edges(flat, out, count);
    return AM_OK;
  });
}

am_status am_contains(const am_matching* m, const am_matching* pattern, int* found, int32_t** out,
                      size_t* pair_count) {
  AM_REQUIRE(m && pattern && found);
  return guarded([&] {
    auto hit = contains(m->value, pattern->value);
    *found = hit.has_value();
    if (out && pair_count) copy_edges(hit ? *hit : std::vector<Edge>{}, out, pair_count);
    return AM_OK;
  });
}

// ---------------------------------------------------------------------------

am_status am_grow_right_reaching(const am_matching* m, int32_t left, int32_t right, int32_t** out,
                                 size_t* pair_count) {
  AM_REQUIRE(m && out && pair_count);
  return guarded([&] {
    const Edge start = left < right ? Edge{left, right} : Edge{right, left};
    copy_edges(grow_right_reaching(m->value, start), out, pair_count);
    return AM_OK;
  });
}

am_status am_properize(const am_matching* m, const int32_t* pins, size_t pin_count, int32_t** out,
                       size_t* pair_count) {
  AM_REQUIRE(m && (pins || pin_count == 0) && out && pair_count);
  return guarded([&] {
    copy_edges(properize(m->value, read_edges(pins, pin_count)).pins, out, pair_count);
    return AM_OK;
  });
}

am_status am_classify_sequence(const am_matching* m, const int32_t* pins, size_t pin_count, unsigned* flags) {
  AM_REQUIRE(m && (pins || pin_count == 0) && flags);
  return guarded([&] {
    const auto cls = classify_sequence(m->value, read_edges(pins, pin_count));
    unsigned bits = 0;
    if (cls.is_pin_sequence) bits |= AM_FLAG_PIN_SEQUENCE;
    if (cls.is_proper) bits |= AM_FLAG_PROPER;
    if (cls.is_right_reaching) bits |= AM_FLAG_RIGHT_REACHING;
    *flags = bits;
    return AM_OK;
  });
}

am_status am_count_proper_rr_sequences(const am_matching* m, uint64_t* out) {
  AM_REQUIRE(m && out);
  return guarded([&] {
    *out = count_proper_rr_sequences(m->value);
    return AM_OK;
  });
}

// ---------------------------------------------------------------------------

am_status am_pattern_kind_parse(const char* name, am_pattern_kind* out) {
  AM_REQUIRE(name && out);
  auto kind = pattern_kind_from_string(name);
  if (!kind) return fail(AM_ERR_INVALID_ARGUMENT, std::string("unknown pattern kind '") + name + "'");
  *out = static_cast<am_pattern_kind>(*kind);
  return AM_OK;
}

am_status am_canonical(am_pattern_kind kind, size_t k, am_matching** out) {
  AM_REQUIRE(valid_kind(kind) && out);
  return guarded([&] {
    *out = new am_matching{canonical(static_cast<PatternKind>(kind), k)};
    return AM_OK;
  });
}

am_status am_canonical_text(am_pattern_kind kind, size_t k, char** out) {
  AM_REQUIRE(valid_kind(kind) && out);
  return guarded([&] {
    *out = copy_string(format_edges(canonical_edges(static_cast<PatternKind>(kind), k)));
    return AM_OK;
  });
}

am_status am_max_pattern(const am_matching* m, am_pattern_kind kind, size_t* size, int32_t** out,
                         size_t* pair_count) {
  AM_REQUIRE(m && valid_kind(kind) && size);
  return guarded([&] {
    const auto best = max_pattern(m->value, static_cast<PatternKind>(kind));
    *size = best.size;
    if (out && pair_count) copy_edges(best.edges, out, pair_count);
    return AM_OK;
  });
}

// ---------------------------------------------------------------------------

am_status am_bounds(size_t k, char** json_out) {
  AM_REQUIRE(json_out);
  return guarded([&] {
    *json_out = copy_string(bounds_json(bounds(k)).dump(2) + "\n");
    return AM_OK;
  });
}

am_status am_witness_certificate(const am_matching* m, size_t k, char** json_out) {
  AM_REQUIRE(m && json_out);
  return guarded([&] {
    *json_out = copy_string(certificate_json(m->value, k, witness(m->value, k)));
    return AM_OK;
  });
}

am_status am_verify_certificate(const char* json_text, char** reason_out) {
  AM_REQUIRE(json_text);
  return guarded([&] {
    const auto check = verify_certificate(json_text);
    if (reason_out) *reason_out = copy_string(check.reason);
    if (check.ok) return AM_OK;
    return fail(AM_ERR_INVALID_CERTIFICATE, "certificate rejected: " + check.reason);
  });
}

// ---------------------------------------------------------------------------

am_status am_stream_create(size_t n, int allow_large, am_stream** out) {
  AM_REQUIRE(out);
  return guarded([&] {
    *out = new am_stream{MatchingStream(n, allow_large != 0)};
    return AM_OK;
  });
}

am_status am_stream_next(am_stream* stream, am_matching** out) {
  AM_REQUIRE(stream && out);
  return guarded([&] {
    auto m = stream->value.next();
    *out = m ? new am_matching{std::move(*m)} : nullptr;
    return AM_OK;
  });
}

void am_stream_free(am_stream* stream) { delete stream; }

am_status am_census(size_t n, size_t jobs, int allow_large, am_census_row* out) {
  AM_REQUIRE(out && jobs >= 1);
  return guarded([&] {
    const auto row = census(n, jobs, allow_large != 0);
    out->n = static_cast<uint32_t>(row.n);
    out->total = row.total;
    out->indecomposable = row.indecomposable;
    out->recurrence_value = row.recurrence_value;
    out->agrees = row.agrees ? 1 : 0;
    return AM_OK;
  });
}

am_status am_scan_avoiders(size_t n_max, size_t k, size_t jobs, int allow_large, char** json_out) {
  AM_REQUIRE(json_out && jobs >= 1);
  return guarded([&] {
    const auto report = scan_avoiders(n_max, k, jobs, allow_large != 0);
    json doc{{"n_max", report.n_max}, {"k", report.k}, {"max_avoider_size", report.max_avoider_size}};
    doc["rows"] = json::array();
    for (const auto& row : report.rows) {
      doc["rows"].push_back({{"n", row.n},
                             {"indecomposable", row.indecomposable},
                             {"avoiders", row.avoiders},
                             {"example", row.example ? json(format_edge_list(*row.example)) : json(nullptr)}});
    }
    *json_out = copy_string(doc.dump(2) + "\n");
    return AM_OK;
  });
}

am_status am_verify_theorem(size_t n_max, size_t k, size_t jobs, int allow_large, char** json_out, int* passed) {
  AM_REQUIRE(json_out && jobs >= 1);
  return guarded([&] {
    const auto report = verify_theorem(n_max, k, jobs, allow_large != 0);
    json doc{{"n_max", report.n_max}, {"k", report.k}, {"bounds", bounds_json(report.bounds)},
             {"passed", report.passed()}, {"failures", report.failures}};
    doc["rows"] = json::array();
    for (const auto& row : report.rows) {
      doc["rows"].push_back({{"n", row.n},
                             {"indecomposable", row.indecomposable},
                             {"interleaving", row.interleavings},
                             {"broken_nesting", row.broken_nestings},
                             {"proper_pin_sequence", row.pin_sequences},
                             {"below_threshold", row.below_threshold}});
    }
    *json_out = copy_string(doc.dump(2) + "\n");
    if (passed) *passed = report.passed() ? 1 : 0;
    return AM_OK;
  });
}

am_status am_render_svg(const am_matching* m, const int32_t* highlight, size_t highlight_count, char** svg_out) {
  AM_REQUIRE(m && (highlight || highlight_count == 0) && svg_out);
  return guarded([&] {
    *svg_out = copy_string(render_svg(m->value, read_edges(highlight, highlight_count)));
    return AM_OK;
  });
}

}  // extern "C"
