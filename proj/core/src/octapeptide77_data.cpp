#include "hrs/embed.hpp"

namespace hrs {

const char* const kOctapeptide77Text =
    "k=8 a=20 alphabet=arndcqeghilkmfpstwyv\n"
    "aaaraaaa\n"
    "arwaaaaa\n"
    "ccchhhhh\n"
    "ccchhhhi\n"
    "ccchhhia\n"
    "ccchhiaa\n"
    "ccchiaaa\n"
    "ccciaaaa\n"
    "cnsaaaaa\n"
    "dddeeeee\n"
    "dddeeeeg\n"
    "dddeeega\n"
    "dddeegaa\n"
    "dddegaaa\n"
    "dddgaaaa\n"
    "dhfaaaaa\n"
    "eagaaaaa\n"
    "eeefaaaa\n"
    "eeemfaaa\n"
    "eeemmfaa\n"
    "eeemmmfa\n"
    "eeemmmmf\n"
    "eeemmmmm\n"
    "fffaaaaa\n"
    "gggppppp\n"
    "gggpppps\n"
    "gggpppsa\n"
    "gggppsaa\n"
    "gggpsaaa\n"
    "gggsaaaa\n"
    "hhhttttt\n"
    "hhhttttw\n"
    "hhhtttwa\n"
    "hhhttwaa\n"
    "hhhtwaaa\n"
    "hhhwaaaa\n"
    "hpvaaaaa\n"
    "iiivaaaa\n"
    "iiiyvaaa\n"
    "iiiyyvaa\n"
    "iiiyyyva\n"
    "iiiyyyyv\n"
    "iiiyyyyy\n"
    "kkkaaaaa\n"
    "klqaaaaa\n"
    "lllaaaaa\n"
    "mkyaaaaa\n"
    "mmmaaaaa\n"
    "nnnccccc\n"
    "nnnccccq\n"
    "nnncccqa\n"
    "nnnccqaa\n"
    "nnncqaaa\n"
    "nnnqaaaa\n"
    "nstaaaaa\n"
    "pppaaaaa\n"
    "qpkaaaaa\n"
    "qqqkaaaa\n"
    "qqqlkaaa\n"
    "qqqllkaa\n"
    "qqqlllka\n"
    "qqqllllk\n"
    "qqqlllll\n"
    "qyeaaaaa\n"
    "rrrdaaaa\n"
    "rrrndaaa\n"
    "rrrnndaa\n"
    "rrrnnnda\n"
    "rrrnnnnd\n"
    "rrrnnnnn\n"
    "sisaaaaa\n"
    "svtaaaaa\n"
    "ttcaaaaa\n"
    "vfraaaaa\n"
    "wmpaaaaa\n"
    "wwdaaaaa\n"
    "yglaaaaa\n";

}  // namespace hrs
