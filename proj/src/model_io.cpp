// Copyright 2026 The Fockbridge Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockbridge/model_io.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace fockbridge {

namespace {

enum class Section { None, OneBody, TwoBody };

/// Strips '#' comments and surrounding whitespace.
std::string strip(const std::string& line) {
  std::string out = line.substr(0, line.find('#'));
  const auto begin = out.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = out.find_last_not_of(" \t\r\n");
  return out.substr(begin, end - begin + 1);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token, int line_number) {
  std::size_t consumed = 0;
  int value = 0;
  try {
    value = std::stoi(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line_number);
  }
  if (consumed != token.size()) {
    throw ParseError("trailing characters in integer '" + token + "'",
                     line_number);
  }
  return value;
}

double parse_double(const std::string& token, int line_number) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + token + "'", line_number);
  }
  if (consumed != token.size()) {
    throw ParseError("trailing characters in number '" + token + "'",
                     line_number);
  }
  return value;
}

int parse_orbital(const std::string& token, int num_orbitals,
                  int line_number) {
  const int value = parse_int(token, line_number);
  if (value < 1 || value > num_orbitals) {
    throw ParseError("orbital " + std::to_string(value) + " outside [1, " +
                     std::to_string(num_orbitals) + "]",
                     line_number);
  }
  return value;
}

}  // namespace

ModelFile parse_model(std::istream& in) {
  std::optional<ModelFile> model;
  Section section = Section::None;
  std::set<std::pair<int, int>> seen_one_body;
  std::map<std::array<int, 4>, Complex> seen_two_body;

  std::string raw_line;
  int line_number = 0;
  while (std::getline(in, raw_line)) {
    ++line_number;
    const std::string line = strip(raw_line);
    if (line.empty()) continue;

    if (!model) {
      const auto tokens = tokenize(line);
      if (tokens.size() != 2 || tokens[0] != "M") {
        throw ParseError("expected header 'M <orbital count>'", line_number);
      }
      const int m = parse_int(tokens[1], line_number);
      if (m < 1 || m > kMaxOrbitals) {
        throw ParseError("orbital count " + std::to_string(m) +
                             " outside [1, " + std::to_string(kMaxOrbitals) +
                             "]",
                         line_number);
      }
      model.emplace(m);
      continue;
    }

    if (line == "[one_body]") {
      section = Section::OneBody;
      continue;
    }
    if (line == "[two_body]") {
      section = Section::TwoBody;
      continue;
    }
    if (line.front() == '[') {
      throw ParseError("unknown section '" + line + "'", line_number);
    }

    const auto tokens = tokenize(line);
    switch (section) {
      case Section::None:
        throw ParseError("entry before any section header", line_number);
      case Section::OneBody: {
        if (tokens.size() != 4) {
          throw ParseError("one-body entry needs 'alpha beta re im'",
                           line_number);
        }
        const int alpha = parse_orbital(tokens[0], model->num_orbitals,
                                        line_number);
        const int beta = parse_orbital(tokens[1], model->num_orbitals,
                                       line_number);
        if (!seen_one_body.insert({alpha, beta}).second) {
          throw ParseError("duplicate one-body entry (" +
                               std::to_string(alpha) + ", " +
                               std::to_string(beta) + ")",
                           line_number);
        }
        model->one_body(alpha, beta) =
            Complex(parse_double(tokens[2], line_number),
                    parse_double(tokens[3], line_number));
        break;
      }
      case Section::TwoBody: {
        if (tokens.size() != 6) {
          throw ParseError(
              "two-body entry needs 'alpha beta gamma delta re im'",
              line_number);
        }
        std::array<int, 4> key;
        for (int j = 0; j < 4; ++j) {
          key[static_cast<std::size_t>(j)] = parse_orbital(
              tokens[static_cast<std::size_t>(j)], model->num_orbitals,
              line_number);
        }
        const Complex value(parse_double(tokens[4], line_number),
                            parse_double(tokens[5], line_number));
        if (seen_two_body.count(key) != 0) {
          throw ParseError("duplicate two-body entry (" +
                               std::to_string(key[0]) + ", " +
                               std::to_string(key[1]) + ", " +
                               std::to_string(key[2]) + ", " +
                               std::to_string(key[3]) + ")",
                           line_number);
        }
        const std::array<int, 4> partner{key[1], key[0], key[3], key[2]};
        const auto partner_it = seen_two_body.find(partner);
        if (partner_it != seen_two_body.end() && partner_it->second != value) {
          throw ParseError(
              "exchange partner (" + std::to_string(partner[0]) + ", " +
                  std::to_string(partner[1]) + ", " +
                  std::to_string(partner[2]) + ", " +
                  std::to_string(partner[3]) +
                  ") was given a different value",
              line_number);
        }
        seen_two_body.emplace(key, value);
        // Every entry fixes its exchange partner as well, keeping the table
        // symmetric without requiring redundant lines.
        model->two_body(key[0], key[1], key[2], key[3]) = value;
        model->two_body(partner[0], partner[1], partner[2], partner[3]) =
            value;
        break;
      }
    }
  }

  if (!model) {
    throw ParseError("missing header 'M <orbital count>'", line_number + 1);
  }
  return *model;
}

ModelFile load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open model file '" + path.string() + "'");
  }
  return parse_model(in);
}

void write_operator_dump(std::ostream& out, const SparseOperator& op) {
  const FockBasis& basis = op.basis();
  out << "# sector M=" << basis.num_orbitals() << " N="
      << basis.num_particles() << " dim=" << basis.size() << " entries="
      << op.entry_count() << '\n';
  out << "# basis legend: position -> occupied orbitals\n";
  for (std::size_t pos = 0; pos < basis.size(); ++pos) {
    out << "#   " << pos << " " << basis.state(pos).to_string() << '\n';
  }
  out << std::setprecision(17);
  for (const auto& [key, value] : op.entries()) {
    out << key.first << ' ' << key.second << ' ' << value.real() << ' '
        << value.imag() << '\n';
  }
}

SparseOperator read_operator_dump(std::istream& in, const FockBasis& basis) {
  SparseOperator op(basis);
  std::string raw_line;
  int line_number = 0;
  while (std::getline(in, raw_line)) {
    ++line_number;
    const std::string line = strip(raw_line);
    if (line.empty()) continue;
    const auto tokens = tokenize(line);
    if (tokens.size() != 4) {
      throw ParseError("dump entry needs 'row col re im'", line_number);
    }
    const int row = parse_int(tokens[0], line_number);
    const int col = parse_int(tokens[1], line_number);
    if (row < 0 || col < 0 || row >= static_cast<int>(basis.size()) ||
        col >= static_cast<int>(basis.size())) {
      throw ParseError("entry position outside the sector dimension " +
                           std::to_string(basis.size()),
                       line_number);
    }
    op.add_entry(static_cast<std::size_t>(row), static_cast<std::size_t>(col),
                 Complex(parse_double(tokens[2], line_number),
                         parse_double(tokens[3], line_number)));
  }
  return op;
}

}  // namespace fockbridge
