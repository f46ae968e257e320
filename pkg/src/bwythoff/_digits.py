"""Decimal expansions of the built-in constants, rounded to nearest.

Each string carries 1,000 fractional digits. Rounding to nearest puts the
true constant strictly inside the centered interval
(literal - 10**-1000 / 2, literal + 10**-1000 / 2), which is the containment
contract every digit constant is trusted to satisfy.
"""

PI_DIGITS = (
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620"
    "8998628034825342117067982148086513282306647093844609550582231725359408128481117"
    "4502841027019385211055596446229489549303819644288109756659334461284756482337867"
    "8316527120190914564856692346034861045432664821339360726024914127372458700660631"
    "5588174881520920962829254091715364367892590360011330530548820466521384146951941"
    "5116094330572703657595919530921861173819326117931051185480744623799627495673518"
    "8575272489122793818301194912983367336244065664308602139494639522473719070217986"
    "0943702770539217176293176752384674818467669405132000568127145263560827785771342"
    "7577896091736371787214684409012249534301465495853710507922796892589235420199561"
    "1212902196086403441815981362977477130996051870721134999999837297804995105973173"
    "2816096318595024459455346908302642522308253344685035261931188171010003137838752"
    "8865875332083814206171776691473035982534904287554687311595628638823537875937519"
    "577818577805321712268066130019278766111959092164201989"
)

E_DIGITS = (
    "2.71828182845904523536028747135266249775724709369995957496696762772407663035354"
    "7594571382178525166427427466391932003059921817413596629043572900334295260595630"
    "7381323286279434907632338298807531952510190115738341879307021540891499348841675"
    "0924476146066808226480016847741185374234544243710753907774499206955170276183860"
    "6261331384583000752044933826560297606737113200709328709127443747047230696977209"
    "3101416928368190255151086574637721112523897844250569536967707854499699679468644"
    "5490598793163688923009879312773617821542499922957635148220826989519366803318252"
    "8869398496465105820939239829488793320362509443117301238197068416140397019837679"
    "3206832823764648042953118023287825098194558153017567173613320698112509961818815"
    "9304169035159888851934580727386673858942287922849989208680582574927961048419844"
    "4363463244968487560233624827041978623209002160990235304369941849146314093431738"
    "1436405462531520961836908887070167683964243781405927145635490613031072085103837"
    "505101157477041718986106873969655212671546889570350354"
)
