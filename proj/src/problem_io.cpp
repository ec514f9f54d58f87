#include "minrank/problem_io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

using nlohmann::json;

std::vector<MessageId> read_ids(const json& arr, std::size_t n, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array of message ids");
  std::vector<MessageId> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& v = arr[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!v.is_number_integer()) throw ParseError(at + ": expected an integer");
    const auto id = v.get<long long>();
    if (id < 1 || static_cast<unsigned long long>(id) > n) {
      throw ParseError(at + ": message id " + std::to_string(id) + " outside [1, " +
                       std::to_string(n) + "]");
    }
    out.push_back(static_cast<MessageId>(id - 1));
  }
  std::vector<MessageId> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (const auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw ParseError(where + ": duplicate message id " + std::to_string(*dup + 1));
  }
  return sorted;
}

}  // namespace

IndexCodingProblem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");

  if (!doc.contains("n")) throw ParseError("n: missing field");
  const json& n_field = doc.at("n");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    throw ParseError("n: expected a positive integer");
  }
  if (!doc.contains("receivers")) throw ParseError("receivers: missing field");
  const json& rs = doc.at("receivers");
  if (!rs.is_array()) throw ParseError("receivers: expected an array");

  IndexCodingProblem p;
  p.n = n_field.get<std::size_t>();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const std::string where = "receivers[" + std::to_string(k) + "]";
    const json& r = rs[k];
    if (!r.is_object()) throw ParseError(where + ": expected an object");
    if (!r.contains("wants")) throw ParseError(where + ".wants: missing field");
    if (!r.contains("has")) throw ParseError(where + ".has: missing field");
    Receiver rec;
    rec.wants = read_ids(r.at("wants"), p.n, where + ".wants");
    rec.has = read_ids(r.at("has"), p.n, where + ".has");
    p.receivers.push_back(std::move(rec));
  }
  return p;
}

IndexCodingProblem read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_problem(const IndexCodingProblem& p) {
  std::ostringstream os;
  os << "{\"n\": " << p.n << ", \"receivers\": [";
  for (std::size_t k = 0; k < p.receivers.size(); ++k) {
    if (k) os << ",\n  ";
    auto list = [&os](const std::vector<MessageId>& ids) {
      os << '[';
      for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? ", " : "") << ids[i] + 1;
      os << ']';
    };
    os << "{\"wants\": ";
    list(p.receivers[k].wants);
    os << ", \"has\": ";
    list(p.receivers[k].has);
    os << '}';
  }
  os << "]}\n";
  return os.str();
}

}  // namespace minrank
