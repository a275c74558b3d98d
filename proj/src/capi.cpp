// Copyright 2026 The qrindex Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qrindex/qrindex.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "qrindex/errors.hpp"
#include "qrindex/numeric.hpp"
#include "qrindex/oracle.hpp"
#include "qrindex/qr_index.hpp"
#include "qrindex/sampler.hpp"

struct qri_modulus {
  qri::FactoredModulus value;
};

struct qri_bit_source {
  std::unique_ptr<qri::BitSource> value;
};

namespace {

thread_local std::string last_error;

qri_status ToStatus(qri::ErrorCode code) {
  return static_cast<qri_status>(static_cast<int>(code) + 1);
}

qri_status Fail(qri_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
qri_status Guard(Body&& body) {
  try {
    last_error.clear();
    body();
    return QRI_OK;
  } catch (const qri::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(QRI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(QRI_ERR_INTERNAL, e.what());
  }
}

qri_status NullArgument(const char* fn) {
  return Fail(QRI_ERR_INVALID_ARGUMENT,
              std::string(fn) + ": null argument");
}

void FillReport(const qri::SampleReport& in, qri_sample_report* out) {
  out->method = in.method == qri::SampleMethod::kIndex ? QRI_METHOD_INDEX
                                                        : QRI_METHOD_CLASSICAL;
  out->samples = in.samples;
  out->total_bits = in.total_bits;
  out->total_attempts = in.total_attempts;
  out->total_candidates = in.total_candidates;
  out->mean_bits_per_sample = in.mean_bits_per_sample;
  out->mean_attempts_per_sample = in.mean_attempts_per_sample;
  out->mean_candidates_per_sample = in.mean_candidates_per_sample;
  out->theoretical_floor = in.theoretical_floor;
}

}  // namespace

extern "C" {

const char* qri_status_name(qri_status status) {
  switch (status) {
    case QRI_OK: return "ok";
    case QRI_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case QRI_ERR_INTERNAL: return "internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(qri::ErrorCode::kRejectionLimit)) {
    return qri::ErrorName(static_cast<qri::ErrorCode>(code)).data();
  }
  return "unknown";
}

const char* qri_last_error(void) { return last_error.c_str(); }

void qri_string_free(char* s) { std::free(s); }

qri_status qri_modulus_parse(const char* text, qri_modulus** out) {
  if (text == nullptr || out == nullptr) return NullArgument(__func__);
  *out = nullptr;
  return Guard([&] {
    *out = new qri_modulus{qri::FactoredModulus::Parse(text)};
  });
}

void qri_modulus_free(qri_modulus* m) { delete m; }

qri_status qri_modulus_n(const qri_modulus* m, char** out) {
  if (m == nullptr || out == nullptr) return NullArgument(__func__);
  return Guard([&] { *out = Dup(m->value.n().get_str()); });
}

qri_status qri_modulus_phi(const qri_modulus* m, char** out) {
  if (m == nullptr || out == nullptr) return NullArgument(__func__);
  return Guard([&] { *out = Dup(m->value.phi().get_str()); });
}

qri_status qri_modulus_text(const qri_modulus* m, char** out) {
  if (m == nullptr || out == nullptr) return NullArgument(__func__);
  return Guard([&] { *out = Dup(m->value.ToString()); });
}

qri_status qri_radix_schedule(const qri_modulus* m, char** out) {
  if (m == nullptr || out == nullptr) return NullArgument(__func__);
  return Guard([&] {
    std::string text;
    for (const qri::Nat& radix : m->value.schedule().radices()) {
      if (!text.empty()) text += ' ';
      text += radix.get_str();
    }
    *out = Dup(text);
  });
}

qri_status qri_index_space_size(const qri_modulus* m, char** out) {
  if (m == nullptr || out == nullptr) return NullArgument(__func__);
  return Guard([&] {
    *out = Dup(qri::IndexSpaceSize(m->value).get_str());
  });
}

qri_status qri_decode(const qri_modulus* m, const char* index,
                      char** residue) {
  if (m == nullptr || index == nullptr || residue == nullptr) {
    return NullArgument(__func__);
  }
  return Guard([&] {
    const qri::QrIndex idx{qri::FromDecimal(index)};
    *residue = Dup(qri::DecodeIndex(m->value, idx).get_str());
  });
}

qri_status qri_encode(const qri_modulus* m, const char* residue,
                      char** index) {
  if (m == nullptr || residue == nullptr || index == nullptr) {
    return NullArgument(__func__);
  }
  return Guard([&] {
    const qri::Nat z = qri::FromDecimal(residue);
    *index = Dup(qri::EncodeResidue(m->value, z).value.get_str());
  });
}

qri_status qri_is_quadratic_residue(const qri_modulus* m, const char* z,
                                    int* out) {
  if (m == nullptr || z == nullptr || out == nullptr) {
    return NullArgument(__func__);
  }
  return Guard([&] {
    *out = qri::IsQuadraticResidue(m->value, qri::FromDecimal(z)) ? 1 : 0;
  });
}

qri_status qri_bit_source_new_seeded(uint64_t seed, qri_bit_source** out) {
  if (out == nullptr) return NullArgument(__func__);
  return Guard([&] {
    *out = new qri_bit_source{std::make_unique<qri::SeededBitSource>(seed)};
  });
}

qri_status qri_bit_source_new_os(qri_bit_source** out) {
  if (out == nullptr) return NullArgument(__func__);
  return Guard([&] {
    *out = new qri_bit_source{std::make_unique<qri::OsBitSource>()};
  });
}

qri_status qri_bit_source_new_scripted(const char* bits,
                                       qri_bit_source** out) {
  if (bits == nullptr || out == nullptr) return NullArgument(__func__);
  return Guard([&] {
    *out = new qri_bit_source{std::make_unique<qri::ScriptedBitSource>(bits)};
  });
}

void qri_bit_source_free(qri_bit_source* src) { delete src; }

qri_status qri_sample(const qri_modulus* m, qri_bit_source* src,
                      qri_method method, char** residue, qri_ledger* ledger) {
  if (m == nullptr || src == nullptr || residue == nullptr) {
    return NullArgument(__func__);
  }
  if (method != QRI_METHOD_INDEX && method != QRI_METHOD_CLASSICAL) {
    return Fail(QRI_ERR_INVALID_ARGUMENT, "unknown sampling method");
  }
  return Guard([&] {
    const auto [z, used] = qri::SampleResidue(
        m->value, *src->value,
        method == QRI_METHOD_INDEX ? qri::SampleMethod::kIndex
                                   : qri::SampleMethod::kClassical);
    *residue = Dup(z.get_str());
    if (ledger != nullptr) {
      *ledger = {used.bits_consumed, used.attempts, used.candidates};
    }
  });
}

qri_status qri_compare_bit_budgets(const qri_modulus* m, uint64_t n_samples,
                                   uint64_t seed,
                                   qri_sample_report* index_report,
                                   qri_sample_report* classical_report) {
  if (m == nullptr || index_report == nullptr || classical_report == nullptr) {
    return NullArgument(__func__);
  }
  return Guard([&] {
    const auto [by_index, classical] =
        qri::CompareBitBudgets(m->value, n_samples, seed);
    FillReport(by_index, index_report);
    FillReport(classical, classical_report);
  });
}

qri_status qri_selftest(uint64_t max_n, qri_selftest_summary* summary,
                        char** detail) {
  if (summary == nullptr) return NullArgument(__func__);
  return Guard([&] {
    const qri::oracle::RangeSummary result = qri::oracle::CertifyRange(max_n);
    summary->moduli_checked = result.moduli_checked;
    summary->indices_checked = result.indices_checked;
    summary->failures = result.failures.size();
    summary->first_failing_n =
        result.failures.empty() ? 0 : result.failures.front().n;
    if (detail != nullptr) {
      std::string text;
      if (!result.failures.empty()) {
        const auto& first = result.failures.front();
        text = "N=" + std::to_string(first.n) + ": " + first.violations.front();
      }
      *detail = Dup(text);
    }
  });
}

}  // extern "C"
