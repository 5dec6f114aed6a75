#ifndef INDCLIQUE_ERRORS_HH
#define INDCLIQUE_ERRORS_HH

#include <stdexcept>
#include <string>
#include <vector>

namespace indclique
{
    /// Malformed caller input: bad vertex ids, self-loops, parse failures.
    class InputError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An exponential oracle was asked to run above its configured size cap.
    class OracleCapExceeded : public std::runtime_error
    {
        public:
            OracleCapExceeded(const std::string & what, unsigned n, unsigned cap) :
                std::runtime_error(what + ": " + std::to_string(n) + " vertices exceeds oracle cap " + std::to_string(cap)),
                vertices(n),
                cap(cap)
            {
            }

            unsigned vertices;
            unsigned cap;
    };

    /// An ordering is not a permutation, has the wrong length, or breaks a forward-degree bound.
    class OrderingError : public InputError
    {
        public:
            using InputError::InputError;
    };

    /// The forward neighbourhood of the vertex at 1-based position `index` holds an
    /// independent set larger than the asserted bound.
    struct IndependenceWitness
    {
        unsigned index = 0;
        std::vector<unsigned> vertices;
    };

    class IndependenceViolation : public std::runtime_error
    {
        public:
            IndependenceViolation(const std::string & what, IndependenceWitness w) :
                std::runtime_error(what),
                witness(std::move(w))
            {
            }

            IndependenceWitness witness;
    };
}

#endif
