// Deterministic instance generation and the batch conjecture/property runner.

#ifndef SORTIC_CORPUS_HPP
#define SORTIC_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sortic/instance.hpp"
#include "sortic/report.hpp"

namespace sortic {

// splitmix64; fixed across platforms so corpus reports are byte-identical.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [lo, hi].
    int range(int lo, int hi) {
        SORTIC_CHECK(lo <= hi, "empty range");
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

enum class CorpusMode { partition, overlap };

struct CorpusParams {
    std::uint64_t seed = 0;
    int count = 0;
    CorpusMode mode = CorpusMode::partition;
    int nmax = 9;
    int dmin = 3;  // facet size range for generated instances
    int dmax = 4;
};

// A spec with the given facet size d = rank+1; partition mode tiles [1, n]
// exactly, overlap mode chains intervals with overlaps allowed.
IntervalComplexSpec random_spec(Rng& rng, CorpusMode mode, int nmax, int d);

// Interval presentations with mixed ranks (non-pure complexes), for the
// decomposition replay tests.
IntervalComplexSpec random_mixed_spec(Rng& rng, int nmax);

struct CorpusOutcome {
    Report report;
    // Instance files for any conjecture counterexamples found.
    std::vector<std::pair<std::string, std::string>> counterexamples;
};

CorpusOutcome corpus_run(const CorpusParams& params);

struct Fixture {
    std::string name;
    std::string text;
};

// K3, PATH, TET4, TWIN3.
const std::vector<Fixture>& fixtures();
ParsedInstance fixture_instance(const std::string& name);

} // namespace sortic

#endif
