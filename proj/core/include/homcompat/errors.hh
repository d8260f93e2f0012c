/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_ERRORS_HH
#define HOMCOMPAT_GUARD_ERRORS_HH 1

#include <cstdint>
#include <stdexcept>
#include <string>

namespace homcompat
{
    /// Bad arguments to a library call: out-of-range vertex, self-loop, k > n and so on.
    class InvalidInput : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A graph or coloring file could not be read. Position is 1-based; for
    /// line-oriented formats it is a line number, for graph6 a byte offset.
    class ParseError : public InvalidInput
    {
        private:
            long _position;

        public:
            ParseError(const std::string & message, long position) :
                InvalidInput(message + " (at " + std::to_string(position) + ")"),
                _position(position)
            {
            }

            auto position() const -> long
            {
                return _position;
            }
    };

    /// An enumeration or sweep would exceed its configured size cap.
    class CapExceeded : public std::runtime_error
    {
        private:
            std::uint64_t _projected, _cap;

        public:
            CapExceeded(const std::string & what, std::uint64_t projected, std::uint64_t cap) :
                std::runtime_error(what + ": projected size " + std::to_string(projected)
                        + " exceeds cap " + std::to_string(cap)),
                _projected(projected),
                _cap(cap)
            {
            }

            auto projected() const -> std::uint64_t
            {
                return _projected;
            }

            auto cap() const -> std::uint64_t
            {
                return _cap;
            }
    };

    /// Something that cannot happen did. Always a bug.
    class InternalError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };
}

#endif
