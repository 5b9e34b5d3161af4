#include "test_support.hpp"

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "coxhodge/errors.hpp"
#include "coxhodge/io.hpp"

namespace testsupport {

std::string data_dir() { return COXHODGE_DATA_DIR; }
std::string schema_dir() { return COXHODGE_SCHEMA_DIR; }
std::string cli_path() { return COXHODGE_CLI_PATH; }
std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

coxhodge::Fan load_fan_fixture(const std::string& name) {
  return coxhodge::io::load_fan(data_file(name));
}

namespace {

void drain(int fd, std::string& sink, bool& open_flag) {
  char buf[4096];
  ssize_t got = read(fd, buf, sizeof buf);
  if (got > 0) {
    sink.append(buf, static_cast<std::size_t>(got));
  } else if (got == 0) {
    open_flag = false;
  }
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  int out_pipe[2];
  int err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    throw std::runtime_error("pipe() failed");
  }

  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork() failed");
  if (pid == 0) {
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    std::string path = cli_path();
    std::vector<std::string> strings;
    strings.push_back(path);
    for (const auto& a : args) strings.push_back(a);
    std::vector<char*> argv;
    argv.reserve(strings.size() + 1);
    for (auto& s : strings) argv.push_back(s.data());
    argv.push_back(nullptr);
    execv(path.c_str(), argv.data());
    _exit(127);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);

  CliResult result;
  bool out_open = true;
  bool err_open = true;
  while (out_open || err_open) {
    pollfd fds[2];
    nfds_t n = 0;
    if (out_open) fds[n++] = {out_pipe[0], POLLIN, 0};
    if (err_open) fds[n++] = {err_pipe[0], POLLIN, 0};
    if (poll(fds, n, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (nfds_t i = 0; i < n; ++i) {
      if (!(fds[i].revents & (POLLIN | POLLHUP))) continue;
      if (fds[i].fd == out_pipe[0]) {
        drain(out_pipe[0], result.out, out_open);
      } else {
        drain(err_pipe[0], result.err, err_open);
      }
    }
  }
  close(out_pipe[0]);
  close(err_pipe[0]);

  int status = 0;
  waitpid(pid, &status, 0);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

coxhodge::GradedPolynomial random_polynomial(const coxhodge::CoxRing& ring,
                                             const coxhodge::DivisorClass& degree,
                                             std::mt19937& rng) {
  std::uniform_int_distribution<int> mag(1, 9);
  std::uniform_int_distribution<int> sign(0, 1);
  coxhodge::GradedPolynomial::TermMap terms;
  for (const auto& mono : ring.monomial_basis(degree)) {
    int c = mag(rng);
    if (sign(rng)) c = -c;
    terms.emplace(mono, Rat(c));
  }
  return coxhodge::GradedPolynomial(&ring.cl(), std::move(terms));
}

Int dim_poly_piece(long d, long nvars) {
  if (d < 0) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(d + nvars - 1),
               static_cast<unsigned long>(nvars - 1));
  return out;
}

Int regular_sequence_hilbert(long nvars, const std::vector<long>& degrees, long n) {
  if (n < 0) return Int(0);
  std::vector<Int> coeff(static_cast<std::size_t>(n) + 1, Int(0));
  coeff[0] = 1;
  for (long m : degrees) {
    // multiply by (1 - t^m), truncated at degree n
    if (m <= n) {
      for (long j = n; j >= m; --j) {
        coeff[static_cast<std::size_t>(j)] -= coeff[static_cast<std::size_t>(j - m)];
      }
    }
  }
  for (long pass = 0; pass < nvars; ++pass) {
    // multiply by 1/(1 - t): prefix sums
    for (long j = 1; j <= n; ++j) {
      coeff[static_cast<std::size_t>(j)] += coeff[static_cast<std::size_t>(j - 1)];
    }
  }
  return coeff[static_cast<std::size_t>(n)];
}

Int koszul_hilbert(long nvars, long e, long n) {
  Int total(0);
  Int binom;
  for (long i = 0; i <= nvars; ++i) {
    long shifted = n - i * e;
    if (shifted < 0) break;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(nvars),
                 static_cast<unsigned long>(i));
    Int term = binom * dim_poly_piece(shifted, nvars);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Int hypersurface_hodge_oracle(long n, long m, long a) {
  long target = (n - a) * m - (n + 1);
  return koszul_hilbert(n + 1, m - 1, target);
}

Int division_series_coefficient(const std::vector<Int>& a, const Int& b, long k) {
  if (k < 0) return Int(0);
  std::vector<Int> num(static_cast<std::size_t>(k) + 1, Int(0));
  num[0] = 1;
  for (const Int& ai : a) {
    for (long j = k; j >= 1; --j) {
      num[static_cast<std::size_t>(j)] += ai * num[static_cast<std::size_t>(j - 1)];
    }
  }
  // divide by (1 + b t): q[j] = num[j] - b * q[j-1]
  std::vector<Int> q(static_cast<std::size_t>(k) + 1, Int(0));
  q[0] = num[0];
  for (long j = 1; j <= k; ++j) {
    q[static_cast<std::size_t>(j)] =
        num[static_cast<std::size_t>(j)] - b * q[static_cast<std::size_t>(j - 1)];
  }
  return q[static_cast<std::size_t>(k)];
}

namespace {

RatVec series_mul(const RatVec& a, const RatVec& b, std::size_t len) {
  RatVec out(len, Rat(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

RatVec series_div(const RatVec& a, const RatVec& b, std::size_t len) {
  // b[0] must be nonzero
  RatVec out(len, Rat(0));
  for (std::size_t k = 0; k < len; ++k) {
    Rat acc = k < a.size() ? a[k] : Rat(0);
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) {
      acc -= b[j] * out[k - j];
    }
    out[k] = acc / b[0];
  }
  return out;
}

// (1 + c z)^d truncated to len coefficients
RatVec linear_power(const Rat& c, long d, std::size_t len) {
  RatVec out(len, Rat(0));
  Rat power(1);
  for (long k = 0; k <= d && static_cast<std::size_t>(k) < len; ++k) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                 static_cast<unsigned long>(k));
    out[static_cast<std::size_t>(k)] = Rat(binom) * power;
    power *= c;
  }
  return out;
}

Rat complete_intersection_chi_at(long n, const std::vector<long>& degrees, const Rat& y) {
  std::size_t len = static_cast<std::size_t>(n) + degrees.size() + 1;
  RatVec one(len, Rat(0));
  one[0] = 1;
  RatVec total =
      series_div(one, series_mul(linear_power(y, 1, len), linear_power(Rat(-1), 1, len), len),
                 len);
  for (long d : degrees) {
    RatVec zy = linear_power(y, d, len);
    RatVec mz = linear_power(Rat(-1), d, len);
    RatVec num(len), den(len);
    for (std::size_t i = 0; i < len; ++i) {
      num[i] = zy[i] - mz[i];
      den[i] = zy[i] + y * mz[i];
    }
    total = series_mul(total, series_div(num, den, len), len);
  }
  return total[len - 1];
}

}  // namespace

RatVec complete_intersection_chi_coeffs(long n, const std::vector<long>& degrees) {
  // Lagrange interpolation of the degree-<=n polynomial chi_y at y = 0..n
  std::vector<Rat> xs, ys;
  for (long t = 0; t <= n; ++t) {
    xs.emplace_back(t);
    ys.push_back(complete_intersection_chi_at(n, degrees, Rat(t)));
  }
  RatVec coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatVec basis{Rat(1)};
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      RatVec next(basis.size() + 1, Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xs[j] * basis[k];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
      coeffs[k] += ys[i] * basis[k] / denom;
    }
  }
  return coeffs;
}

std::size_t dense_rank_oracle(std::vector<RatVec> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rat factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

bool type_matches(const std::string& t, const Json& value) {
  if (t == "object") return value.is_object();
  if (t == "array") return value.is_array();
  if (t == "string") return value.is_string();
  if (t == "integer") return value.is_number_integer();
  if (t == "number") return value.is_number();
  if (t == "boolean") return value.is_boolean();
  if (t == "null") return value.is_null();
  return false;
}

bool check(const Json& schema, const Json& value, const std::string& path, std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = path + ": " + message;
    return false;
  };

  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), value);
    } else {
      for (const auto& opt : t) {
        if (type_matches(opt.get<std::string>(), value)) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) return fail("type mismatch, got " + std::string(value.type_name()));
  }

  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& opt : schema["enum"]) {
      if (opt == value) {
        ok = true;
        break;
      }
    }
    if (!ok) return fail("value not in enum");
  }

  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          return fail("missing required key " + key.get<std::string>());
        }
      }
    }
    const Json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props && props->contains(it.key())) {
        if (!check((*props)[it.key()], it.value(), path + "/" + it.key(), why)) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        return fail("unexpected key " + it.key());
      }
    }
  }

  if (value.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& element : value) {
      if (!check(schema["items"], element, path + "/" + std::to_string(i), why)) return false;
      ++i;
    }
  }

  return true;
}

}  // namespace

bool schema_accepts(const Json& schema, const Json& value, std::string* why) {
  return check(schema, value, "$", why);
}

Json load_schema(const std::string& name) {
  std::ifstream in(schema_dir() + "/" + name + ".schema.json");
  if (!in) throw std::runtime_error("missing schema " + name);
  return Json::parse(in);
}

}  // namespace testsupport
