#include "qacc/specfun.hpp"

#include <array>

namespace qacc::specfun {

namespace {

// mpmath.besseli(1j*nu, z) at mp.dps = 40, rounded to 20 significant digits.
constexpr std::array<BesselReference, 49> kTable = {{
    {0.5, 0.01, -0.89672093757412920671, -0.81302063109265988268},
    {0.5, 0.1, 0.37689138147982482337, -1.1527687670578920968},
    {0.5, 0.5, 1.1321695737202050486, -0.57996611555706567551},
    {0.5, 1, 1.4440165142331278256, -0.28132156861029880848},
    {0.5, 2, 2.4904853295894434218, -0.07920683555109428028},
    {0.5, 5, 28.025853684631220894, -0.002642534858231323429},
    {0.5, 10, 2853.1607464351490206, -0.000012869831557525157515},
    {1, 0.01, 0.53778566607718348303, 1.8403685476184377298},
    {1, 0.1, -1.7317142493677666964, -0.82852136995576024815},
    {1, 0.5, 0.86999736320475443904, -1.7770016885719335152},
    {1, 1, 1.9007996758194253617, -1.0639600135544408219},
    {1, 2, 3.2174906632719612254, -0.33961614834290053288},
    {1, 5, 30.542593924781221926, -0.012377721889973096752},
    {1, 10, 2968.640799269459029, -0.000062312225984811865745},
    {2, 0.01, -1.7366836365505638057, 6.2926369237395040363},
    {2, 0.1, 6.4465817270878041964, 1.0474542036915006409},
    {2, 0.5, -6.4595404378048512495, -1.4063985380291348569},
    {2, 1, -0.30760240414883722754, -6.8706518846869085698},
    {2, 2, 7.1610992175764515384, -4.0906694129688500998},
    {2, 5, 43.539420213535249511, -0.21728033706987457088},
    {2, 10, 3481.6279238981979527, -0.0012512886628484494307},
    {5, 0.01, 205.00344663100650778, 411.33011688751119312},
    {5, 0.1, 458.94649022443988138, 25.04437170163308418},
    {5, 0.5, -107.79600375638976042, 447.90687983416774177},
    {5, 1, 232.25531489900969725, -401.80282981770361631},
    {5, 2, -309.10010552900113833, 365.76478989644670572},
    {5, 5, 584.56569953911263486, -336.46154766248324439},
    {5, 10, 11015.956485460407481, -5.5741840712937706507},
    {10, 0.01, -575593.78500733000517, 607844.81780589954235},
    {10, 0.1, 816638.51135130367865, 184172.24944756817139},
    {10, 0.5, -690255.98885578801752, -474551.07560982649894},
    {10, 1, -278927.26390158817502, -791503.12522188716605},
    {10, 2, 196725.5589594899816, -822418.41348345557518},
    {10, 5, 480948.2465706773392, 758625.69399525176128},
    {10, 10, 1193902.9733770543377, -688460.42996942292417},
    {20, 0.01, -2146547730426.3407821, -3289468670506.0658663},
    {20, 0.1, 3915445122256.7341247, -312651947248.08951268},
    {20, 0.5, 3029444027735.5627894, 2501109712990.2834567},
    {20, 1, -1554326668834.724248, 3609932271565.3672349},
    {20, 2, -3920024549593.9830706, -373097807834.54015727},
    {20, 5, -3070711169844.8301396, 2550187028196.2933662},
    {20, 10, -3932880122324.4320297, 1527659232939.438331},
    {30, 0.01, 16141674222994043500.0, 13868417376181470996.0},
    {30, 0.1, 16651216617104486101.0, 13252400557793593892.0},
    {30, 0.5, 5444154305707004638.7, -20574514578641390949.0},
    {30, 1, 17244338619759483782.0, 12480822921871004535.0},
    {30, 2, -17640861451914761463.0, 11945512777073583919.0},
    {30, 5, 309683464804079187.61, -21429120556506875124.0},
    {30, 10, 21251297351999145171.0, -5357043199829755804.0},
}};

}  // namespace

std::span<const BesselReference> bessel_reference_table() { return kTable; }

}  // namespace qacc::specfun
