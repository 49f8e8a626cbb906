#include "oddaut/scan.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "oddaut/structure.hpp"

namespace oddaut {
namespace fs = std::filesystem;

namespace {

constexpr const char* kCacheFile = ".oddaut_cache.tsv";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string cache_key(const std::string& contents, std::uint64_t budget) {
  return sha256_hex(contents) + ":b" + std::to_string(budget) + ":c" + std::to_string(order_cap());
}

std::map<std::string, std::string> load_cache(const fs::path& path) {
  std::map<std::string, std::string> cache;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    cache[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return cache;
}

void store_cache(const fs::path& path, const std::map<std::string, std::string>& cache) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    for (const auto& [key, record] : cache) out << key << '\t' << record << '\n';
  }
  fs::rename(tmp, path);
}

}  // namespace

std::string scan_header() {
  return "#name\torder\tcenter_order\tderived_order\taut_order\taut_parity\tni_status\tspec\twall_time_ms";
}

std::string format_record(const ScanRecord& r) {
  std::ostringstream s;
  s << r.name << '\t' << r.order << '\t' << r.center_order << '\t' << r.derived_order << '\t' << r.aut_order << '\t'
    << r.aut_parity << '\t' << r.ni_status << '\t' << (r.spec.empty() ? "-" : r.spec) << '\t' << r.wall_time_ms;
  return s.str();
}

ScanRecord parse_record(const std::string& line) {
  const auto f = split_tabs(line);
  require(f.size() == 9, ErrorKind::ParseError, "scan record needs 9 fields: " + line);
  try {
    ScanRecord r;
    r.name = f[0];
    r.order = std::stoull(f[1]);
    r.center_order = std::stoull(f[2]);
    r.derived_order = std::stoull(f[3]);
    r.aut_order = f[4];
    r.aut_parity = f[5];
    r.ni_status = f[6];
    r.spec = f[7] == "-" ? "" : f[7];
    r.wall_time_ms = std::stoll(f[8]);
    return r;
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "malformed scan record: " + line);
  }
}

ScanRecord analyze_record(const GroupFile& file, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  const Group& g = file.group;
  ScanRecord r;
  r.name = g.name();
  r.order = g.order();
  r.center_order = center(g).size();
  r.derived_order = derived_subgroup(g).size();
  const AutGroup aut = automorphism_group(g, budget, 0);
  const NiReport ni = is_ni(g, aut);
  r.aut_order = aut.order.str();
  r.aut_parity = ni.aut_order_odd ? "odd" : "even";
  r.ni_status = ni.trivial_group ? "trivial" : (ni.no_inversion ? "ni" : "not-ni");
  r.spec = file.spec;
  r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  require(EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) == 1,
          ErrorKind::InvariantViolation, "SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

ScanSummary scan_directory(const std::string& dir, const ScanOptions& options, std::ostream& out) {
  require(fs::is_directory(dir), ErrorKind::InvalidParameter, dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cay") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  const fs::path cache_path = fs::path(dir) / kCacheFile;
  std::map<std::string, std::string> cache = options.use_cache ? load_cache(cache_path) : decltype(cache){};
  std::mutex cache_mutex;

  enum class Slot { Pending, Record, SkippedEven, Failed };
  struct Outcome {
    Slot state = Slot::Pending;
    ScanRecord record;
    bool cached = false;
    ScanFailure failure;
  };
  std::vector<Outcome> outcomes(files.size());
  std::mutex done_mutex;
  std::condition_variable done_cv;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      Outcome o;
      try {
        const std::string contents = read_file(files[i].string());
        const std::string key = cache_key(contents, options.budget);
        std::optional<std::string> hit;
        {
          std::lock_guard lock(cache_mutex);
          if (auto it = cache.find(key); it != cache.end()) hit = it->second;
        }
        if (hit) {
          o.record = parse_record(*hit);
          o.cached = true;
          o.state = options.odd_only && o.record.order % 2 == 0 ? Slot::SkippedEven : Slot::Record;
        } else {
          const GroupFile gf = parse_group_text(contents, files[i].string());
          if (options.odd_only && gf.group.order() % 2 == 0) {
            o.state = Slot::SkippedEven;
          } else {
            o.record = analyze_record(gf, options.budget);
            o.state = Slot::Record;
            std::lock_guard lock(cache_mutex);
            cache[key] = format_record(o.record);
          }
        }
      } catch (const Error& e) {
        o.state = Slot::Failed;
        o.failure = {files[i].filename().string(), e.kind(), e.what()};
      }
      {
        std::lock_guard lock(done_mutex);
        outcomes[i] = std::move(o);
      }
      done_cv.notify_all();
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(work);

  ScanSummary summary;
  summary.files = files.size();
  out << scan_header() << '\n' << std::flush;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome o;
    {
      std::unique_lock lock(done_mutex);
      done_cv.wait(lock, [&] { return outcomes[i].state != Slot::Pending; });
      o = outcomes[i];
    }
    switch (o.state) {
      case Slot::Record:
        out << format_record(o.record) << '\n' << std::flush;
        summary.from_cache += o.cached ? 1 : 0;
        summary.records.push_back(std::move(o.record));
        break;
      case Slot::SkippedEven: ++summary.skipped_even; break;
      case Slot::Failed: summary.failures.push_back(std::move(o.failure)); break;
      case Slot::Pending: break;
    }
  }
  for (auto& t : workers) t.join();
  if (options.use_cache) store_cache(cache_path, cache);

  for (const auto& f : summary.failures) out << "# failed\t" << f.file << '\t' << f.message << '\n';
  const fs::path coverage = fs::path(dir) / "COVERAGE";
  if (fs::exists(coverage)) {
    std::ifstream in(coverage);
    std::string line;
    while (std::getline(in, line)) out << "# " << line << '\n';
  }
  std::size_t odd_aut = 0;
  for (const auto& r : summary.records) odd_aut += r.aut_parity == "odd" ? 1 : 0;
  out << "# scanned " << summary.records.size() << " of " << summary.files << " files; skipped " << summary.skipped_even
      << " of even order; " << summary.failures.size() << " failed; " << odd_aut << " with |Aut| odd\n";
  return summary;
}

}  // namespace oddaut
