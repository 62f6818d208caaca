#include "symprod/fixtures.hpp"

#include "symprod/bridge.hpp"

#include <cstdlib>
#include <stdexcept>

#ifndef SYMPROD_FIXTURE_DIR
#define SYMPROD_FIXTURE_DIR "fixtures"
#endif

namespace symprod {

RingPresentation sphere_ring()
{
    return RingBuilder().add_generator("u", 2).build();
}

RingPresentation s2xs2_ring()
{
    RingBuilder b;
    b.add_generator("u1", 2).add_generator("u2", 2).add_generator("w", 4);
    b.set_product("u1", "u2", {{"w", 1}});
    b.set_product("u2", "u1", {{"w", 1}});
    return b.build();
}

RingPresentation cp2_conn_cp2bar_ring()
{
    RingBuilder b;
    b.add_generator("u1", 2).add_generator("u2", 2).add_generator("w", 4);
    b.set_product("u1", "u1", {{"w", 1}});
    b.set_product("u2", "u2", {{"w", -1}});
    return b.build();
}

RingPresentation hopf_ring(unsigned m, unsigned k)
{
    if (m == 0 || k == 0)
        throw std::out_of_range("hopf_ring needs m, k >= 1");
    RingBuilder b;
    b.add_generator("u", 2 * m).add_generator("v", 4 * m);
    b.set_product("u", "u", {{"v", Integer(2 * k)}});
    return b.build();
}

RingPresentation sullivan_ring(long s)
{
    RingBuilder b;
    for (const char* a : {"a1", "a2", "a3"})
        b.add_generator(a, 1);
    for (const char* c : {"c1", "c2", "c3"})
        b.add_generator(c, 2);
    b.add_generator("w", 3);
    const Integer S(s);
    b.set_product("a1", "a2", {{"c3", S}});
    b.set_product("a2", "a1", {{"c3", -S}});
    b.set_product("a2", "a3", {{"c1", S}});
    b.set_product("a3", "a2", {{"c1", -S}});
    b.set_product("a3", "a1", {{"c2", S}});
    b.set_product("a1", "a3", {{"c2", -S}});
    for (int i = 1; i <= 3; ++i) {
        std::string a = "a" + std::to_string(i), c = "c" + std::to_string(i);
        b.set_product(a, c, {{"w", 1}});
        b.set_product(c, a, {{"w", 1}});
    }
    return b.build();
}

std::vector<std::string> fixture_names()
{
    return {"torus", "surface", "sphere2", "s2xs2", "cp2_conn_cp2bar", "hopf_2k", "sullivan_mu_s"};
}

RingPresentation named_fixture(const std::string& name, long param)
{
    if (name == "torus")
        return surface_ring(1);
    if (name == "surface") {
        if (param < 1)
            throw std::out_of_range("surface needs g >= 1");
        return surface_ring(static_cast<unsigned>(param));
    }
    if (name == "sphere2")
        return sphere_ring();
    if (name == "s2xs2")
        return s2xs2_ring();
    if (name == "cp2_conn_cp2bar")
        return cp2_conn_cp2bar_ring();
    if (name == "hopf_2k") {
        if (param < 1)
            throw std::out_of_range("hopf_2k needs k >= 1");
        return hopf_ring(1, static_cast<unsigned>(param));
    }
    if (name == "sullivan_mu_s")
        return sullivan_ring(param);
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::filesystem::path fixture_dir()
{
    if (const char* env = std::getenv("SYMPROD_FIXTURES"); env && *env)
        return env;
    return SYMPROD_FIXTURE_DIR;
}

}  // namespace symprod
