#include "dmop/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace dmop {

using nlohmann::json;

namespace {

[[noreturn]] void bad_key(const std::string& key, const std::string& why)
{
    throw ConfigError("config key '" + key + "': " + why);
}

template <typename T>
T get_as(const json& doc, const std::string& key)
{
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        bad_key(key, e.what());
    }
}

std::size_t get_count(const json& doc, const std::string& key)
{
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        bad_key(key, "expected a nonnegative integer");
    }
    return v.get<std::size_t>();
}

double get_real(const json& doc, const std::string& key)
{
    const json& v = doc.at(key);
    if (!v.is_number()) {
        bad_key(key, "expected a number");
    }
    return v.get<double>();
}

void reject_unknown(const json& doc, const std::set<std::string>& known, const std::string& prefix)
{
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key)) {
            bad_key(prefix + key, "unknown key");
        }
    }
}

template <typename Id, typename Parse>
std::vector<Id> parse_ids(const json& doc, const std::string& key, Parse parse)
{
    const json& v = doc.at(key);
    if (!v.is_array() || v.empty()) {
        bad_key(key, "expected a non-empty array of ids");
    }
    std::vector<Id> out;
    for (const auto& item : v) {
        if (!item.is_string()) {
            bad_key(key, "expected string ids");
        }
        try {
            out.push_back(parse(item.get<std::string>()));
        } catch (const ConfigError& e) {
            bad_key(key, e.what());
        }
    }
    return out;
}

template <typename Id>
json ids_json(const std::vector<Id>& ids)
{
    json arr = json::array();
    for (Id id : ids) {
        arr.push_back(std::string(to_string(id)));
    }
    return arr;
}

std::string csv_real(double v) { return format_real(v); }

double parse_real_field(const std::string& s, std::size_t line)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DataError("results line " + std::to_string(line) + ": bad number '" + s + "'");
    }
    return v;
}

template <typename Int>
Int parse_int_field(const std::string& s, std::size_t line)
{
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DataError("results line " + std::to_string(line) + ": bad integer '" + s + "'");
    }
    return v;
}

} // namespace

ExperimentConfig parse_config(const json& doc)
{
    if (!doc.is_object()) {
        throw ConfigError("config: top level must be a JSON object");
    }
    reject_unknown(doc,
                   {"schema_version", "problems", "algorithms", "responses", "severity_values", "frequency_values",
                    "repeats", "master_seed", "num_changes", "pop_size", "num_variables", "t0", "onset_delay",
                    "reference_point", "variation", "response", "output_dir"},
                   "");

    ExperimentConfig cfg;
    SweepSpec& s = cfg.sweep;
    if (doc.contains("schema_version")) {
        const json& v = doc.at("schema_version");
        if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
            bad_key("schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
        }
    }
    if (doc.contains("problems")) {
        s.problems = parse_ids<ProblemId>(doc, "problems", parse_problem_id);
    }
    if (doc.contains("algorithms")) {
        s.algorithms = parse_ids<AlgorithmId>(doc, "algorithms", parse_algorithm_id);
    }
    if (doc.contains("responses")) {
        s.responses = parse_ids<ResponseId>(doc, "responses", parse_response_id);
    }
    if (doc.contains("severity_values")) {
        const json& v = doc.at("severity_values");
        if (!v.is_array() || v.empty()) {
            bad_key("severity_values", "expected a non-empty array of numbers");
        }
        s.severities.clear();
        for (const auto& item : v) {
            if (!item.is_number() || !(item.get<double>() > 0.0)) {
                bad_key("severity_values", "values must be positive numbers");
            }
            s.severities.push_back(item.get<double>());
        }
    }
    if (doc.contains("frequency_values")) {
        const json& v = doc.at("frequency_values");
        if (!v.is_array() || v.empty()) {
            bad_key("frequency_values", "expected a non-empty array of integers");
        }
        s.frequencies.clear();
        for (const auto& item : v) {
            if (!item.is_number_integer() || item.get<long long>() < 1) {
                bad_key("frequency_values", "values must be positive integers");
            }
            s.frequencies.push_back(item.get<std::size_t>());
        }
    }
    if (doc.contains("repeats")) {
        s.repeats = get_count(doc, "repeats");
    }
    if (doc.contains("master_seed")) {
        const json& v = doc.at("master_seed");
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            bad_key("master_seed", "expected a nonnegative integer");
        }
        s.master_seed = v.get<Seed>();
    }
    if (doc.contains("num_changes")) {
        s.num_changes = get_count(doc, "num_changes");
    }
    if (doc.contains("pop_size")) {
        s.pop_size = get_count(doc, "pop_size");
    }
    if (doc.contains("num_variables")) {
        s.num_variables = get_count(doc, "num_variables");
    }
    if (doc.contains("t0")) {
        s.t0 = get_real(doc, "t0");
    }
    if (doc.contains("onset_delay")) {
        s.onset_delay = get_count(doc, "onset_delay");
    }
    if (doc.contains("reference_point")) {
        const json& v = doc.at("reference_point");
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            bad_key("reference_point", "expected [r1, r2]");
        }
        s.ref = {v[0].get<double>(), v[1].get<double>()};
    }
    if (doc.contains("variation")) {
        const json& v = doc.at("variation");
        if (!v.is_object()) {
            bad_key("variation", "expected an object");
        }
        reject_unknown(v, {"crossover_prob", "crossover_index", "mutation_prob", "mutation_index"}, "variation.");
        if (v.contains("crossover_prob")) {
            s.variation.crossover_prob = get_real(v, "crossover_prob");
        }
        if (v.contains("crossover_index")) {
            s.variation.crossover_index = get_real(v, "crossover_index");
        }
        if (v.contains("mutation_prob")) {
            const json& m = v.at("mutation_prob");
            if (m.is_string() && m.get<std::string>() == "1/n") {
                s.variation.mutation_prob = -1.0;
            } else if (m.is_number() && m.get<double>() >= 0.0) {
                s.variation.mutation_prob = m.get<double>();
            } else {
                bad_key("variation.mutation_prob", "expected \"1/n\" or a number in [0, 1]");
            }
        }
        if (v.contains("mutation_index")) {
            s.variation.mutation_index = get_real(v, "mutation_index");
        }
    }
    if (doc.contains("response")) {
        const json& v = doc.at("response");
        if (!v.is_object()) {
            bad_key("response", "expected an object");
        }
        reject_unknown(v, {"replace_fraction", "dr2_mutation_prob", "dr2_mutation_index"}, "response.");
        if (v.contains("replace_fraction")) {
            s.response.replace_fraction = get_real(v, "replace_fraction");
        }
        if (v.contains("dr2_mutation_prob")) {
            s.response.mutation_prob = get_real(v, "dr2_mutation_prob");
        }
        if (v.contains("dr2_mutation_index")) {
            s.response.mutation_index = get_real(v, "dr2_mutation_index");
        }
    }
    if (doc.contains("output_dir")) {
        cfg.output_dir = get_as<std::string>(doc, "output_dir");
    }

    try {
        s.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

json materialize(const ExperimentConfig& config)
{
    const SweepSpec& s = config.sweep;
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["problems"] = ids_json(s.problems);
    doc["algorithms"] = ids_json(s.algorithms);
    doc["responses"] = ids_json(s.responses);
    doc["severity_values"] = s.severities;
    doc["frequency_values"] = s.frequencies;
    doc["repeats"] = s.repeats;
    doc["master_seed"] = s.master_seed;
    doc["num_changes"] = s.num_changes;
    doc["pop_size"] = s.pop_size;
    doc["num_variables"] = s.num_variables;
    doc["t0"] = s.t0;
    doc["onset_delay"] = s.onset_delay;
    doc["reference_point"] = {s.ref[0], s.ref[1]};
    json variation;
    variation["crossover_prob"] = s.variation.crossover_prob;
    variation["crossover_index"] = s.variation.crossover_index;
    if (s.variation.mutation_prob < 0.0) {
        variation["mutation_prob"] = "1/n";
    } else {
        variation["mutation_prob"] = s.variation.mutation_prob;
    }
    variation["mutation_index"] = s.variation.mutation_index;
    doc["variation"] = variation;
    json response;
    response["replace_fraction"] = s.response.replace_fraction;
    response["dr2_mutation_prob"] = s.response.mutation_prob;
    response["dr2_mutation_index"] = s.response.mutation_index;
    doc["response"] = response;
    doc["output_dir"] = config.output_dir;
    return doc;
}

std::vector<ResultRow> result_rows(const SweepResult& result)
{
    std::vector<ResultRow> rows;
    const SweepSpec& s = result.spec;
    for (const auto& run : result.runs) {
        for (const auto& rec : run.records) {
            ResultRow row;
            row.problem = to_string(s.problems[run.key.problem]);
            row.algorithm = to_string(s.algorithms[run.key.algorithm]);
            row.response = to_string(s.responses[run.key.response]);
            row.one_over_nt = s.severities[run.key.severity];
            row.tau_t = s.frequencies[run.key.frequency];
            row.repeat = run.key.repeat;
            row.seed = run.seed;
            row.interval_index = rec.interval_index;
            row.t = rec.t;
            row.achieved_hv = rec.achieved_hv;
            row.optimal_hv = rec.optimal_hv;
            row.hvd = rec.hvd;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<ResultRow> result_rows(const RunSpec& spec, const std::vector<IntervalRecord>& records)
{
    std::vector<ResultRow> rows;
    for (const auto& rec : records) {
        rows.push_back(ResultRow{std::string(to_string(spec.problem)), std::string(to_string(spec.algorithm)),
                                 std::string(to_string(spec.response.kind)), spec.schedule.step, spec.schedule.tau,
                                 0, spec.seed, rec.interval_index, rec.t, rec.achieved_hv, rec.optimal_hv,
                                 rec.hvd});
    }
    return rows;
}

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows, const ResponseConfig& response)
{
    out << "# schema_version=" << kSchemaVersion << " replace_fraction=" << csv_real(response.replace_fraction)
        << " dr2_mutation_prob=" << csv_real(response.mutation_prob)
        << " dr2_mutation_index=" << csv_real(response.mutation_index) << '\n';
    out << kResultsHeader << '\n';
    for (const auto& r : rows) {
        out << r.problem << ',' << r.algorithm << ',' << r.response << ',' << csv_real(r.one_over_nt) << ','
            << r.tau_t << ',' << r.repeat << ',' << r.seed << ',' << r.interval_index << ',' << csv_real(r.t) << ','
            << csv_real(r.achieved_hv) << ',' << csv_real(r.optimal_hv) << ',' << csv_real(r.hvd) << '\n';
    }
}

std::string results_csv(const std::vector<ResultRow>& rows, const ResponseConfig& response)
{
    std::ostringstream os;
    write_results_csv(os, rows, response);
    return os.str();
}

std::vector<ResultRow> read_results_csv(std::istream& in)
{
    std::vector<ResultRow> rows;
    std::string line;
    std::size_t lineno = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!seen_header) {
            if (line != kResultsHeader) {
                throw DataError("results table: unexpected header '" + line + "'");
            }
            seen_header = true;
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 12) {
            throw DataError("results line " + std::to_string(lineno) + ": expected 12 fields, got " +
                            std::to_string(fields.size()));
        }
        ResultRow r;
        r.problem = fields[0];
        r.algorithm = fields[1];
        r.response = fields[2];
        r.one_over_nt = parse_real_field(fields[3], lineno);
        r.tau_t = parse_int_field<std::size_t>(fields[4], lineno);
        r.repeat = parse_int_field<std::size_t>(fields[5], lineno);
        r.seed = parse_int_field<Seed>(fields[6], lineno);
        r.interval_index = parse_int_field<std::size_t>(fields[7], lineno);
        r.t = parse_real_field(fields[8], lineno);
        r.achieved_hv = parse_real_field(fields[9], lineno);
        r.optimal_hv = parse_real_field(fields[10], lineno);
        r.hvd = parse_real_field(fields[11], lineno);
        rows.push_back(std::move(r));
    }
    if (!seen_header) {
        throw DataError("results table: missing header");
    }
    return rows;
}

json cells_json(const SweepResult& result, const ExperimentConfig& config)
{
    const SweepSpec& s = result.spec;
    json cells = json::array();
    for (const auto& [key, stats] : result.cells) {
        json c;
        c["problem"] = std::string(to_string(s.problems[key.problem]));
        c["algorithm"] = std::string(to_string(s.algorithms[key.algorithm]));
        c["response"] = std::string(to_string(s.responses[key.response]));
        c["one_over_nt"] = s.severities[key.severity];
        c["tau_t"] = s.frequencies[key.frequency];
        c["mean_hvd"] = stats.mean_hvd;
        c["std_hvd"] = stats.std_hvd;
        c["count"] = stats.count;
        cells.push_back(std::move(c));
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["config"] = materialize(config);
    doc["cells"] = std::move(cells);
    return doc;
}

} // namespace dmop
