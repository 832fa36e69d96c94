#pragma once
#include <cstdint>

// Sobol direction numbers, 64 dimensions x 30 bit levels (Joe-Kuo ordering).
// v[d][j] holds m_j scaled so the implied point lattice is i / 2^30.
namespace mlrisk::detail {
inline constexpr int sobol_max_dim  = 64;
inline constexpr int sobol_bit_count = 30;
inline constexpr std::uint32_t sobol_directions[64][30] = {
  {536870912u, 268435456u, 134217728u, 67108864u, 33554432u, 16777216u, 8388608u, 4194304u, 2097152u, 1048576u, 524288u, 262144u, 131072u, 65536u, 32768u, 16384u, 8192u, 4096u, 2048u, 1024u, 512u, 256u, 128u, 64u, 32u, 16u, 8u, 4u, 2u, 1u},
  {536870912u, 805306368u, 671088640u, 1006632960u, 570425344u, 855638016u, 713031680u, 1069547520u, 538968064u, 808452096u, 673710080u, 1010565120u, 572653568u, 858980352u, 715816960u, 1073725440u, 536879104u, 805318656u, 671098880u, 1006648320u, 570434048u, 855651072u, 713042560u, 1069563840u, 538976288u, 808464432u, 673720360u, 1010580540u, 572662306u, 858993459u},
  {536870912u, 805306368u, 402653184u, 603979776u, 973078528u, 385875968u, 595591168u, 826277888u, 438304768u, 657457152u, 999817216u, 358875136u, 538574848u, 807862272u, 406552576u, 605372416u, 975183872u, 389033984u, 597170176u, 828646400u, 437926400u, 656873216u, 1002152832u, 357921088u, 536885792u, 805312304u, 402662296u, 603992420u, 973085210u, 385885991u},
  {536870912u, 805306368u, 134217728u, 335544320u, 1040187392u, 486539264u, 679477248u, 616562688u, 908066816u, 156237824u, 376963072u, 968097792u, 503447552u, 755171328u, 545292288u, 817971200u, 136568832u, 340905984u, 1056606208u, 494291968u, 673276416u, 609457408u, 922347392u, 158784320u, 371195936u, 961544240u, 511180808u, 766771220u, 537002046u, 805503005u},
  {536870912u, 268435456u, 134217728u, 738197504u, 1040187392u, 922746880u, 511705088u, 658505728u, 379584512u, 200278016u, 676855808u, 1009516544u, 916586496u, 468779008u, 542670848u, 271499264u, 144826368u, 754085888u, 1054435328u, 929870848u, 503351808u, 654495488u, 377744768u, 188970688u, 681697312u, 1022521360u, 920217608u, 460108844u, 536906302u, 268619575u},
  {536870912u, 268435456u, 402653184u, 201326592u, 838860800u, 150994944u, 360710144u, 1052770304u, 941621248u, 470810624u, 706215936u, 84672512u, 665976832u, 935919616u, 766869504u, 586072064u, 301998080u, 419434496u, 226498560u, 851446784u, 169882112u, 353372416u, 1066931584u, 1003241152u, 529676320u, 735648784u, 128821784u, 669173004u, 900859826u, 784934857u},
  {536870912u, 805306368u, 671088640u, 872415232u, 369098752u, 620756992u, 260046848u, 952107008u, 799014912u, 149946368u, 126353408u, 1019478016u, 295567360u, 434176000u, 504463360u, 555335680u, 832446464u, 702623744u, 907126784u, 354022400u, 664679936u, 216077568u, 965846912u, 769248448u, 138287520u, 68230640u, 1041866760u, 287174660u, 429918270u, 502268945u},
  {536870912u, 268435456u, 671088640u, 335544320u, 570425344u, 150994944u, 75497472u, 188743680u, 497025024u, 663748608u, 34078720u, 419692544u, 747241472u, 524615680u, 1068007424u, 781336576u, 109649920u, 306630656u, 825059328u, 954000384u, 1033896448u, 932184320u, 705168000u, 218366272u, 243925536u, 373620880u, 992510024u, 634536116u, 455680474u, 903271033u},
  {536870912u, 268435456u, 671088640u, 335544320u, 167772160u, 889192448u, 444596224u, 473956352u, 236978176u, 370147328u, 981991424u, 205783040u, 640286720u, 34930688u, 814383104u, 961101824u, 1017946112u, 508694528u, 1051265024u, 794608640u, 103416320u, 303366400u, 411730560u, 759775552u, 917282976u, 726799184u, 606669224u, 857523652u, 134873826u, 67436641u},
  {536870912u, 268435456u, 939524096u, 738197504u, 637534208u, 620756992u, 578813952u, 381681664u, 216006656u, 913309696u, 478674944u, 264503296u, 812515328u, 700121088u, 350322688u, 175980544u, 42901504u, 113946624u, 887404544u, 444587008u, 982385152u, 717947136u, 317293440u, 1064911552u, 402694752u, 1006744144u, 504183336u, 151428460u, 76456654u, 868921959u},
  {536870912u, 268435456u, 671088640u, 67108864u, 33554432u, 452984832u, 662700032u, 146800640u, 367001600u, 728760320u, 535298048u, 611581952u, 308412416u, 867500032u, 570589184u, 184795136u, 260268032u, 214298624u, 401348608u, 813575168u, 946037248u, 750121216u, 126098048u, 415902784u, 1038180896u, 795930800u, 502175992u, 1065217228u, 903873406u, 997196295u},
  {536870912u, 268435456u, 134217728u, 201326592u, 369098752u, 721420288u, 629145600u, 180355072u, 891289600u, 38797312u, 950534144u, 345243648u, 327811072u, 835125248u, 413630464u, 77185024u, 461692928u, 1036808192u, 245770240u, 798041088u, 1041162752u, 923496704u, 998353024u, 768140480u, 111805280u, 597099440u, 672105176u, 470663276u, 504291890u, 655061653u},
  {536870912u, 805306368u, 671088640u, 335544320u, 1040187392u, 587202560u, 947912704u, 213909504u, 65011712u, 139460608u, 627572736u, 396099584u, 906100736u, 118030336u, 780500992u, 1003339776u, 90284032u, 664530944u, 503764992u, 319628288u, 277062144u, 415429376u, 1038834304u, 727508288u, 501219808u, 458228016u, 904397064u, 257687948u, 199361502u, 744030901u},
  {536870912u, 805306368u, 402653184u, 603979776u, 234881024u, 822083584u, 276824064u, 683671552u, 1012924416u, 714080256u, 1060634624u, 558104576u, 939655168u, 335740928u, 369197056u, 352468992u, 511762432u, 432214016u, 752945152u, 38964224u, 56346112u, 198617344u, 121238400u, 893719616u, 771751968u, 16777264u, 142606360u, 213909540u, 845152270u, 462422065u},
  {536870912u, 268435456u, 134217728u, 1006632960u, 704643072u, 352321536u, 645922816u, 658505728u, 127926272u, 389021696u, 524812288u, 591659008u, 153223168u, 477167616u, 988315648u, 494387200u, 451452928u, 225726464u, 317253632u, 829731840u, 954751488u, 611771136u, 510377088u, 53989440u, 432709664u, 335892496u, 109078536u, 927167548u, 262208042u, 724742933u},
  {536870912u, 805306368u, 134217728u, 872415232u, 905969664u, 822083584u, 293601280u, 557842432u, 694157312u, 498073600u, 728236032u, 447479808u, 191496192u, 716111872u, 57311232u, 514605056u, 896131072u, 800018432u, 619247616u, 250430464u, 227175936u, 324837120u, 652269696u, 166802880u, 764046880u, 593272624u, 786487432u, 1039218164u, 462056982u, 308059905u},
  {536870912u, 268435456u, 134217728u, 1006632960u, 234881024u, 83886080u, 1031798784u, 432013312u, 601882624u, 336592896u, 581435392u, 66846720u, 78249984u, 721223680u, 1059749888u, 171884544u, 793403392u, 49188864u, 327268352u, 214109184u, 375490048u, 835931392u, 256584832u, 317502144u, 461473312u, 818105616u, 409152648u, 886092540u, 852198958u, 187583765u},
  {536870912u, 805306368u, 134217728u, 1006632960u, 436207616u, 419430400u, 226492416u, 457179136u, 274726912u, 940572672u, 884473856u, 654049280u, 54132736u, 348061696u, 383418368u, 200065024u, 671293440u, 201412608u, 302118912u, 621011968u, 394296832u, 37987584u, 501388672u, 592468672u, 618298912u, 518825264u, 931141000u, 843094780u, 367222330u, 525530409u},
  {536870912u, 268435456u, 671088640u, 335544320u, 637534208u, 1023410176u, 729808896u, 784334848u, 970981376u, 628097024u, 117964800u, 873201664u, 921305088u, 360513536u, 1071677440u, 141574144u, 76079104u, 248418304u, 688576512u, 218905600u, 325690880u, 314374912u, 193007232u, 1052936128u, 299976224u, 829582096u, 554423976u, 151960532u, 493412358u, 1002344493u},
  {536870912u, 805306368u, 939524096u, 738197504u, 771751936u, 251658240u, 864026624u, 272629760u, 140509184u, 342884352u, 39321600u, 559677440u, 1016987648u, 598147072u, 402685952u, 469811200u, 369156096u, 587247616u, 494974976u, 524303360u, 1004588544u, 70271232u, 171450752u, 892096960u, 1053165920u, 50038128u, 614363768u, 1067929244u, 234881026u, 1056964611u},
  {536870912u, 805306368u, 939524096u, 872415232u, 436207616u, 251658240u, 578813952u, 339738624u, 710934528u, 930086912u, 384303104u, 242483200u, 629014528u, 364183552u, 41975808u, 608223232u, 308338688u, 57724928u, 216557568u, 24394752u, 134121984u, 32854272u, 685779328u, 321920448u, 76069792u, 218425808u, 697761272u, 348220116u, 92143618u, 632619011u},
  {536870912u, 268435456u, 402653184u, 872415232u, 234881024u, 587202560u, 528482304u, 473956352u, 840957952u, 19922944u, 115867648u, 786169856u, 312868864u, 820969472u, 696287232u, 457195520u, 1000366080u, 175165440u, 625489920u, 279743488u, 971931136u, 54751488u, 267274368u, 71517376u, 107936672u, 251865968u, 634294936u, 829677500u, 243662850u, 48168961u},
  {536870912u, 805306368u, 671088640u, 603979776u, 33554432u, 419430400u, 444596224u, 574619648u, 694157312u, 852492288u, 101187584u, 727973888u, 736231424u, 482148352u, 157319168u, 47235072u, 772317184u, 258248704u, 702679040u, 96297984u, 333507072u, 546326784u, 124257664u, 1035230016u, 803868704u, 786024848u, 939672968u, 1009597428u, 235446274u, 1063555075u},
  {536870912u, 805306368u, 134217728u, 872415232u, 301989888u, 587202560u, 897581056u, 239075328u, 895483904u, 210763776u, 749207552u, 478412800u, 351666176u, 548601856u, 853573632u, 298893312u, 608706560u, 710201344u, 524175360u, 329747456u, 1061049856u, 598210816u, 926840192u, 396829248u, 624843424u, 883420688u, 280915416u, 988227532u, 635314178u, 913821699u},
  {536870912u, 805306368u, 134217728u, 335544320u, 905969664u, 1023410176u, 260046848u, 624951296u, 601882624u, 256901120u, 1019740160u, 196870144u, 728891392u, 42139648u, 583565312u, 314359808u, 452075520u, 247681024u, 950556672u, 95171584u, 173678080u, 795854080u, 217241472u, 63113536u, 1059613984u, 887892976u, 532339272u, 490705740u, 1069161986u, 759153923u},
  {536870912u, 268435456u, 671088640u, 738197504u, 637534208u, 687865856u, 511705088u, 893386752u, 10485760u, 403701760u, 343408640u, 572260352u, 587857920u, 301006848u, 49840128u, 727465984u, 766156800u, 216117248u, 771758080u, 352379904u, 276879872u, 809526528u, 941660800u, 72401984u, 173550560u, 256662896u, 936545960u, 738011012u, 898292226u, 414278913u},
  {536870912u, 805306368u, 671088640u, 201326592u, 100663296u, 218103808u, 578813952u, 658505728u, 434110464u, 546308096u, 272105472u, 406585344u, 609353728u, 173080576u, 190349312u, 804044800u, 92971008u, 1056780288u, 959617024u, 813822976u, 134261248u, 1006660864u, 771809152u, 16811584u, 612422368u, 708889072u, 996179144u, 131085828u, 165153282u, 950820099u},
  {536870912u, 268435456u, 939524096u, 872415232u, 33554432u, 318767104u, 8388608u, 759169024u, 228589568u, 816840704u, 84410368u, 30670848u, 117309440u, 336396288u, 304644096u, 723795968u, 886497280u, 791269376u, 519997440u, 806161408u, 673735168u, 203695360u, 911662720u, 292118208u, 333356576u, 771604048u, 545279864u, 1027651572u, 899711490u, 78705921u},
  {536870912u, 805306368u, 939524096u, 335544320u, 436207616u, 318767104u, 494927872u, 1035993088u, 228589568u, 902823936u, 569901056u, 1003225088u, 686424064u, 894500864u, 149585920u, 89243648u, 820666368u, 290557952u, 719980544u, 38919168u, 929725952u, 1066478336u, 986335360u, 172096576u, 456314720u, 831329136u, 869821640u, 81577524u, 993185634u, 26022771u},
  {536870912u, 268435456u, 402653184u, 603979776u, 838860800u, 486539264u, 343932928u, 12582912u, 987758592u, 466616320u, 421003264u, 918290432u, 98959360u, 173998080u, 694583296u, 1050624000u, 965140480u, 474992640u, 102639616u, 926131200u, 764967424u, 645703424u, 654709120u, 898598976u, 41850336u, 354648752u, 685779576u, 382750668u, 362321378u, 310149809u},
  {536870912u, 805306368u, 671088640u, 872415232u, 771751936u, 16777216u, 461373440u, 633339904u, 1017118720u, 997195776u, 81264640u, 388235264u, 919994368u, 209256448u, 41320448u, 856276992u, 11411456u, 288165888u, 66623488u, 966005760u, 648967680u, 338510592u, 511222912u, 693419712u, 797847520u, 194901584u, 1031799480u, 549471412u, 555749346u, 733013587u},
  {536870912u, 805306368u, 939524096u, 201326592u, 436207616u, 989855744u, 142606336u, 180355072u, 228589568u, 659554304u, 445120512u, 94109696u, 326762496u, 214106112u, 618299392u, 546553856u, 248668160u, 600829952u, 168298496u, 861674496u, 1020963328u, 479459072u, 752024704u, 349149760u, 411573920u, 43798576u, 972724552u, 822305852u, 1006272162u, 906207283u},
  {536870912u, 805306368u, 134217728u, 201326592u, 167772160u, 889192448u, 578813952u, 1069547520u, 555745280u, 485490688u, 80216064u, 816578560u, 1053687808u, 226951168u, 268861440u, 942391296u, 71868416u, 107802624u, 1064175616u, 397927424u, 493756928u, 515369728u, 1039052416u, 410483904u, 877535136u, 239572336u, 858188312u, 500903852u, 671104418u, 1006665331u},
  {536870912u, 268435456u, 671088640u, 335544320u, 771751936u, 553648128u, 109051904u, 734003200u, 794820608u, 938475520u, 87556096u, 282329088u, 915275776u, 327614464u, 322338816u, 227753984u, 173547520u, 925110272u, 464918528u, 391369728u, 196616704u, 1058302720u, 535693184u, 293019840u, 1049530720u, 394746000u, 355923160u, 949203532u, 584627042u, 1038365585u},
  {536870912u, 268435456u, 939524096u, 469762048u, 33554432u, 1023410176u, 1031798784u, 583008256u, 845152256u, 357564416u, 432537600u, 1023148032u, 220069888u, 366018560u, 112623616u, 746405888u, 710959104u, 424685568u, 600369152u, 503088128u, 849280512u, 168918784u, 156680064u, 468557376u, 29937312u, 821860016u, 924760920u, 886120628u, 959860898u, 868080049u},
  {536870912u, 268435456u, 939524096u, 603979776u, 436207616u, 1023410176u, 411041792u, 935329792u, 509607936u, 927989760u, 498597888u, 188481536u, 871235584u, 343605248u, 842432512u, 555171840u, 652238848u, 277925888u, 1004046336u, 409756672u, 878053888u, 575089408u, 425237376u, 44843584u, 179760992u, 114778544u, 8409432u, 62966044u, 1012958562u, 777034417u},
  {536870912u, 805306368u, 402653184u, 335544320u, 100663296u, 922746880u, 276824064u, 230686720u, 136314880u, 1011875840u, 169345024u, 623116288u, 568459264u, 705626112u, 358252544u, 968605696u, 1040244736u, 318803968u, 243300352u, 784370688u, 513825280u, 110160640u, 314073728u, 347391552u, 601491680u, 863725008u, 1050685416u, 915471532u, 179876578u, 11804371u},
  {536870912u, 805306368u, 134217728u, 1006632960u, 1040187392u, 218103808u, 411041792u, 1027604480u, 706740224u, 1060110336u, 596115456u, 352059392u, 836632576u, 626851840u, 771784704u, 892944384u, 748691456u, 1064316928u, 422053888u, 713833472u, 108412416u, 59837696u, 618043520u, 970489152u, 425626144u, 270815024u, 939559816u, 876173564u, 35661790u, 858793053u},
  {536870912u, 805306368u, 671088640u, 1006632960u, 1040187392u, 989855744u, 528482304u, 406847488u, 387973120u, 967835648u, 929562624u, 177995776u, 617480192u, 83034112u, 888373248u, 484327424u, 552083456u, 517746688u, 636364800u, 977484800u, 572243456u, 889355008u, 210124672u, 1004480576u, 827703072u, 363939248u, 290826600u, 632373660u, 961917774u, 431050931u},
  {536870912u, 805306368u, 134217728u, 738197504u, 369098752u, 184549376u, 645922816u, 1044381696u, 253755392u, 749731840u, 726138880u, 244056064u, 577110016u, 287506432u, 196771840u, 467681280u, 1002971136u, 197931008u, 63309824u, 802368512u, 970102272u, 853297920u, 342230656u, 706940480u, 624592672u, 161497264u, 585637192u, 746337676u, 235801830u, 522126179u},
  {536870912u, 805306368u, 134217728u, 738197504u, 905969664u, 721420288u, 595591168u, 37748736u, 664797184u, 678428672u, 849870848u, 215744512u, 626917376u, 35061760u, 153976832u, 445464576u, 282992640u, 458698752u, 84772864u, 482176000u, 869668352u, 352000768u, 830188416u, 272002624u, 939897248u, 605123440u, 438319400u, 489689756u, 143146238u, 569126247u},
  {536870912u, 268435456u, 939524096u, 1006632960u, 704643072u, 184549376u, 679477248u, 188743680u, 916455424u, 1045430272u, 991428608u, 11272192u, 257032192u, 546766848u, 525500416u, 412631040u, 594681856u, 847712256u, 678082560u, 438598656u, 588777984u, 749476608u, 491917440u, 395786048u, 500341920u, 416838992u, 1028797336u, 127343596u, 634552818u, 618160839u},
  {536870912u, 805306368u, 939524096u, 201326592u, 838860800u, 520093696u, 545259520u, 331350016u, 799014912u, 997195776u, 139984896u, 719060992u, 505020416u, 488308736u, 128352256u, 1064484864u, 239214592u, 197603328u, 331134976u, 829017088u, 459575808u, 947252992u, 316586112u, 304017344u, 790627744u, 414193776u, 536355544u, 497822236u, 608314170u, 684141227u},
  {536870912u, 805306368u, 134217728u, 67108864u, 637534208u, 184549376u, 25165824u, 859832320u, 580911104u, 116391936u, 1072168960u, 726925312u, 515768320u, 754384896u, 382435328u, 130695168u, 659955712u, 1017327616u, 32868352u, 477971456u, 893224448u, 916028160u, 416000384u, 952780608u, 148253856u, 14891504u, 81105000u, 583882516u, 703970206u, 679305799u},
  {536870912u, 268435456u, 671088640u, 603979776u, 637534208u, 352321536u, 243269632u, 658505728u, 530579456u, 533725184u, 96993280u, 718536704u, 461242368u, 631832576u, 552894464u, 477642752u, 808853504u, 943525888u, 204122112u, 33645568u, 856327680u, 462505216u, 702711424u, 953504576u, 7647648u, 439910096u, 789980488u, 833432724u, 1052935262u, 88435769u},
  {536870912u, 805306368u, 939524096u, 738197504u, 33554432u, 553648128u, 746586112u, 775946240u, 799014912u, 334495744u, 358088704u, 1044119552u, 722075648u, 431292416u, 750944256u, 585973760u, 837951488u, 75051008u, 714127360u, 694447104u, 876257792u, 505499904u, 455095424u, 565195328u, 16258464u, 550248176u, 282213336u, 684274044u, 82356266u, 115893253u},
  {536870912u, 805306368u, 402653184u, 201326592u, 503316480u, 150994944u, 662700032u, 297795584u, 434110464u, 1037041664u, 935854080u, 751042560u, 475660288u, 588447744u, 211058688u, 963985408u, 714383360u, 209022976u, 185907200u, 414546944u, 729064960u, 1034253568u, 584876416u, 1030841536u, 279877728u, 259414288u, 933769128u, 970208724u, 233968626u, 801580743u},
  {536870912u, 805306368u, 939524096u, 738197504u, 503316480u, 654311424u, 998244352u, 113246208u, 853540864u, 818937856u, 837287936u, 21233664u, 572129280u, 823984128u, 144080896u, 258490368u, 219586560u, 514355200u, 1014405120u, 79191040u, 561939968u, 304904960u, 151829888u, 615873984u, 291508064u, 705694992u, 621289096u, 982793300u, 913441938u, 295248201u},
  {536870912u, 268435456u, 402653184u, 67108864u, 369098752u, 520093696u, 813694976u, 943718400u, 56623104u, 904921088u, 178782208u, 1028390912u, 652869632u, 809304064u, 137461760u, 470532096u, 303669248u, 151506944u, 798210048u, 147510272u, 990522880u, 915213056u, 1064943232u, 938992448u, 465274336u, 382124720u, 939524424u, 335553788u, 234889506u, 452993921u},
  {536870912u, 268435456u, 134217728u, 201326592u, 771751936u, 721420288u, 478150656u, 742391808u, 14680064u, 883949568u, 811073536u, 652476416u, 328335360u, 48037888u, 563314688u, 264421376u, 436314112u, 287297536u, 496117760u, 970791936u, 890480128u, 797107968u, 887198336u, 246404928u, 826946656u, 863569136u, 643929784u, 435156308u, 623522122u, 663303033u},
  {536870912u, 805306368u, 939524096u, 469762048u, 570425344u, 285212672u, 310378496u, 297795584u, 929038336u, 277872640u, 818413568u, 499384320u, 493748224u, 630915072u, 475496448u, 1059405824u, 700030976u, 914255872u, 168695808u, 84618240u, 346003968u, 1054952704u, 383225984u, 48591040u, 81378784u, 737045840u, 172375464u, 403648596u, 739353894u, 438985887u},
  {536870912u, 805306368u, 134217728u, 335544320u, 905969664u, 1056964608u, 1031798784u, 893386752u, 803209216u, 185597952u, 1001914368u, 39583744u, 104988672u, 140050432u, 727351296u, 885309440u, 144744448u, 633466880u, 641214464u, 119284736u, 564280832u, 390671104u, 652381056u, 161008192u, 862106208u, 416861776u, 578993240u, 952692044u, 314221562u, 819253509u},
  {536870912u, 268435456u, 402653184u, 335544320u, 369098752u, 721420288u, 444596224u, 557842432u, 1054867456u, 707788800u, 554172416u, 730595328u, 314703872u, 941424640u, 69304320u, 237223936u, 1057726464u, 209899520u, 174077952u, 611320832u, 191368704u, 536624896u, 27921536u, 870386240u, 327918688u, 381864816u, 905986024u, 989860284u, 41954250u, 893388689u},
  {536870912u, 805306368u, 671088640u, 335544320u, 973078528u, 285212672u, 394264576u, 725614592u, 1004535808u, 437256192u, 555220992u, 1066663936u, 1061814272u, 33357824u, 186155008u, 915652608u, 348233728u, 79163392u, 467666944u, 705694720u, 152570368u, 731120896u, 88739456u, 285017152u, 479757792u, 500419280u, 790736632u, 514324100u, 989331526u, 360973285u},
  {536870912u, 805306368u, 402653184u, 738197504u, 100663296u, 16777216u, 914358272u, 37748736u, 144703488u, 974127104u, 790102016u, 59506688u, 517341184u, 232980480u, 87064576u, 567492608u, 645210112u, 804147200u, 102762496u, 609225728u, 968361472u, 345770752u, 21889408u, 221184064u, 633769376u, 341852304u, 83730984u, 933305988u, 295379910u, 97606883u},
  {536870912u, 268435456u, 134217728u, 335544320u, 570425344u, 654311424u, 192937984u, 20971520u, 719323136u, 118489088u, 461897728u, 155451392u, 1055522816u, 620822528u, 1016823808u, 46252032u, 1068146688u, 267677696u, 998770688u, 423887872u, 921305600u, 822150400u, 513509504u, 633457088u, 875209440u, 246706256u, 292029112u, 508822980u, 761398498u, 944047953u},
  {536870912u, 805306368u, 134217728u, 335544320u, 838860800u, 251658240u, 260046848u, 432013312u, 1046478848u, 856686592u, 429391872u, 751042560u, 719978496u, 390660096u, 826245120u, 775143424u, 430891008u, 476721152u, 68683776u, 168037376u, 319422976u, 697894144u, 617057408u, 1055376320u, 626844640u, 1042757232u, 565020568u, 7258308u, 570647654u, 923074097u},
  {536870912u, 268435456u, 134217728u, 738197504u, 369098752u, 285212672u, 528482304u, 440401920u, 383778816u, 923795456u, 378011648u, 566493184u, 917897216u, 653983744u, 789610496u, 847495168u, 467607552u, 834039808u, 677906432u, 718537728u, 1044251136u, 977210112u, 270960000u, 523813952u, 1034921952u, 778417808u, 870264248u, 230062532u, 912789410u, 399771505u},
  {536870912u, 268435456u, 671088640u, 738197504u, 301989888u, 486539264u, 813694976u, 968884224u, 761266176u, 781189120u, 650641408u, 687079424u, 197525504u, 543227904u, 906657792u, 856047616u, 394387456u, 944648192u, 908462080u, 657523712u, 362973696u, 425872128u, 680518784u, 769341248u, 996836384u, 227953264u, 424272216u, 1018835108u, 803210546u, 441452925u},
  {536870912u, 268435456u, 671088640u, 1006632960u, 637534208u, 754974720u, 343932928u, 29360128u, 803209216u, 378535936u, 247988224u, 611581952u, 885915648u, 1065025536u, 626163712u, 373047296u, 762830848u, 38236160u, 565053440u, 690684928u, 519735808u, 874008320u, 168946048u, 588806976u, 94014752u, 860374128u, 54125048u, 771521188u, 429687346u, 88557149u},
  {536870912u, 805306368u, 939524096u, 469762048u, 1040187392u, 318767104u, 696254464u, 574619648u, 463470592u, 110100480u, 98041856u, 318504960u, 683540480u, 521601024u, 529367040u, 356958208u, 270540800u, 164319232u, 619055104u, 531303424u, 345214464u, 281134848u, 880127872u, 493982912u, 905454176u, 725046416u, 878182632u, 482085540u, 891158774u, 377948031u},
  {536870912u, 268435456u, 134217728u, 201326592u, 771751936u, 251658240u, 931135488u, 935329792u, 174063616u, 210763776u, 977797120u, 413401088u, 477495296u, 395247616u, 667648000u, 41533440u, 10149888u, 341684224u, 398329856u, 736822272u, 542999040u, 765903616u, 251227008u, 986739648u, 217769440u, 198031856u, 1014368408u, 126813220u, 801867538u, 242861801u},
  {536870912u, 268435456u, 671088640u, 872415232u, 1040187392u, 251658240u, 461373440u, 104857600u, 337641472u, 848297984u, 516423680u, 737411072u, 636092416u, 317128704u, 359366656u, 423346176u, 1007296512u, 437555200u, 419563520u, 545457152u, 600410624u, 493407488u, 1026273152u, 706237376u, 554413792u, 1015567760u, 700688136u, 746345892u, 698985010u, 937119805u},
  {536870912u, 268435456u, 402653184u, 872415232u, 838860800u, 788529152u, 327155712u, 364904448u, 538968064u, 42991616u, 1061683200u, 594280448u, 1072300032u, 698417152u, 71532544u, 318226432u, 490070016u, 773623808u, 553781248u, 580715520u, 792823296u, 996855040u, 200567936u, 464935872u, 727084256u, 24858992u, 150988296u, 237869476u, 596217170u, 499567131u},
};
} // namespace mlrisk::detail
