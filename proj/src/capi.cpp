#include "radonfilt/radonfilt.h"

#include <cstring>
#include <string>

#include "qcombinatorics.hpp"
#include "verifier.hpp"

struct rf_task {
  radon::RunConfig cfg;
  std::string output;
  std::string error;
};

namespace {

int write_buf(const std::string& s, char* buf, size_t len) {
  if (buf != nullptr && len > 0) {
    size_t n = std::min(len - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return static_cast<int>(s.size());
}

bool parse_long(const char* v, long& out) {
  if (v == nullptr || *v == '\0') return false;
  char* end = nullptr;
  long r = std::strtol(v, &end, 10);
  if (end == nullptr || *end != '\0') return false;
  out = r;
  return true;
}

}  // namespace

extern "C" {

rf_task* rf_task_new(const char* command) {
  if (command == nullptr) return nullptr;
  auto* t = new (std::nothrow) rf_task;
  if (t == nullptr) return nullptr;
  t->cfg.command = command;
  return t;
}

void rf_task_free(rf_task* t) { delete t; }

int rf_task_set(rf_task* t, const char* key, const char* value) {
  if (t == nullptr || key == nullptr || value == nullptr) return RF_ERR_USAGE;
  const std::string k = key;
  long num = 0;
  if (k == "family") {
    if (std::strcmp(value, "subset") == 0) {
      t->cfg.family = radon::LevelRef::Family::subset;
    } else if (std::strcmp(value, "subspace") == 0) {
      t->cfg.family = radon::LevelRef::Family::subspace;
    } else {
      return RF_ERR_USAGE;
    }
  } else if (k == "n") {
    if (!parse_long(value, num) || num < 0) return RF_ERR_USAGE;
    t->cfg.n = static_cast<int>(num);
  } else if (k == "s") {
    if (!parse_long(value, num) || num < 0) return RF_ERR_USAGE;
    t->cfg.s = static_cast<int>(num);
  } else if (k == "q") {
    if (!parse_long(value, num) || num < 0) return RF_ERR_USAGE;
    t->cfg.q = num;
  } else if (k == "format") {
    t->cfg.format = value;
  } else if (k == "check") {
    t->cfg.check = value;
  } else if (k == "jobs") {
    if (!parse_long(value, num) || num < 1) return RF_ERR_USAGE;
    t->cfg.jobs = static_cast<int>(num);
  } else if (k == "max-level-points") {
    if (!parse_long(value, num) || num < 1) return RF_ERR_USAGE;
    t->cfg.limits.max_level_points = static_cast<std::size_t>(num);
  } else {
    return RF_ERR_USAGE;
  }
  return RF_OK;
}

int rf_task_run(rf_task* t) {
  if (t == nullptr) return RF_ERR_USAGE;
  radon::TaskResult r = radon::run_task(t->cfg);
  t->output = std::move(r.output);
  t->error = std::move(r.error);
  return r.exit_code;
}

const char* rf_task_output(const rf_task* t) { return t == nullptr ? "" : t->output.c_str(); }

const char* rf_task_error(const rf_task* t) { return t == nullptr ? "" : t->error.c_str(); }

int rf_binomial(long n, long m, char* buf, size_t len) {
  try {
    return write_buf(radon::binomial(n, m).get_str(), buf, len);
  } catch (const std::exception&) {
    return -1;
  }
}

int rf_q_integer(long n, long q, char* buf, size_t len) {
  try {
    return write_buf(radon::q_int(n, q).get_str(), buf, len);
  } catch (const std::exception&) {
    return -1;
  }
}

int rf_gaussian_binomial(long n, long m, long q, char* buf, size_t len) {
  try {
    return write_buf(radon::gaussian_binomial(n, m, q).get_str(), buf, len);
  } catch (const std::exception&) {
    return -1;
  }
}

}  // extern "C"
