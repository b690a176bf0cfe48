"""Embedded phrase banks for the synthetic corpus generator.

Three disjoint vocabulary tiers keep the generated labels clean and the
per-sample adversarial assertions provable:

* spam phrases carry a recurring spam-core vocabulary that never appears
  in ham text;
* "hammy" phrases carry office/personal ham-core vocabulary, a designated
  subset of which (HIDDEN_WORD_POOL) is reserved for hidden-text salting
  and never appears in neutral phrases;
* neutral phrases are class-uninformative cover used by both labels.

Generated emails draw sentences from these banks; only glue words (the,
you, please, ...) are shared across tiers.
"""

SPAM_PHRASES = (
    "buy cheap viagra online today",
    "order viagra without a prescription",
    "genuine viagra pills at half price",
    "cialis and viagra shipped overnight",
    "discount cialis from our trusted pharmacy",
    "our online pharmacy ships worldwide",
    "no prescription needed for these meds",
    "cheap meds delivered to your door",
    "lose weight fast with this miracle cure",
    "miracle weight loss pills really work",
    "amazing enlargement results in two weeks",
    "doctors hate this simple miracle cure",
    "burn fat with one cheap pill",
    "pharmacy sale on all popular pills",
    "your prescription refilled for less",
    "herbal pills with guaranteed results",
    "this cure works or your money back",
    "trusted pharmacy with discreet shipping",
    "stock up on cheap pills now",
    "new wonder pills melt pounds away",
    "win big at our online casino",
    "casino bonus doubles your first deposit",
    "hit the jackpot tonight at our casino",
    "play poker and slots for real cash",
    "free spins waiting in your casino account",
    "the jackpot has reached two million dollars",
    "you have won our weekly lottery",
    "lottery winnings are waiting for you",
    "claim your lottery prize before friday",
    "congratulations you are our grand prize winner",
    "guaranteed winner in every draw",
    "double your winnings with one bet",
    "place your bets and win cash instantly",
    "biggest jackpot in casino history",
    "your prize claim expires at midnight",
    "collect your winnings within three days",
    "make a million dollars from home",
    "earn fast cash with zero effort",
    "turn spare time into real cash",
    "guaranteed profit on every investment",
    "this investment returns ten percent weekly",
    "get rich with our proven system",
    "secret wealth system revealed today",
    "unlimited earnings working from home",
    "risk free investment with guaranteed returns",
    "our traders guarantee monthly profit",
    "instant cash advance with no questions",
    "low interest loan approved in seconds",
    "refinance your mortgage at record rates",
    "personal loan offers up to fifty thousand",
    "bad credit no problem for our lenders",
    "consolidate debt with one cheap loan",
    "pre approved credit line of ten thousand dollars",
    "boost your credit score overnight",
    "wire transfer of your inheritance is pending",
    "a foreign prince needs your bank account",
    "million dollar inheritance awaits your reply",
    "transfer fee required to release your funds",
    "your account has been suspended click here",
    "verify your password immediately or lose access",
    "security alert confirm your bank details now",
    "unusual activity detected verify your account",
    "click the link to confirm your identity",
    "your refund is ready claim it now",
    "urgent action required on your account",
    "confirm your password to avoid suspension",
    "update your billing details immediately",
    "your bank requires immediate verification",
    "restore access by clicking this secure link",
    "final notice your account closes today",
    "immediate verification keeps your refund",
    "huge discount on luxury watches",
    "designer bags at ninety percent off",
    "clearance sale everything must go",
    "exclusive offer for selected customers only",
    "limited stock order yours today",
    "flash sale ends in two hours",
    "best deal of the season inside",
    "unbeatable bargain prices this week only",
    "your discount voucher expires tonight",
    "free gift with every order today",
    "redeem your coupon for instant savings",
    "vip membership free for the first month",
    "exclusive deal just for you",
    "act now before the offer expires",
    "limited time offer do not miss out",
    "this deal will never come back",
    "save big with our seasonal sale",
    "two for one offer on all stock",
    "claim your free trial bottle today",
    "free trial ends soon order now",
    "lonely singles in your area tonight",
    "hot singles want to meet you",
    "meet beautiful singles near you",
    "your secret admirer left a message",
    "someone special is waiting to chat",
    "dating profile matches found for you",
    "cheap flights to exotic destinations",
    "you qualify for a free cruise",
    "congratulations you won a free cruise package",
    "free holiday package for two winners",
    "urgent reply needed to release payment",
    "this is not spam we promise",
    "unsubscribe link at the bottom",
    "millions already joined our program",
    "be your own boss earn cash daily",
    "work one hour and earn hundreds",
    "cash prizes handed out every hour",
    "instant bonus when you sign up",
    "sign up bonus worth five hundred dollars",
    "claim the bonus in your account",
    "exclusive bonus for new members",
    "win a brand new phone today",
    "you are the lucky visitor number one million",
    "spin the wheel and win big",
    "triple your deposit this weekend",
    "the cheapest meds on the internet",
    "genuine pills no questions asked",
    "your order of pills is waiting",
    "refill your meds at discount rates",
    "market crash protection guaranteed profit",
    "gold investment with instant returns",
    "crypto profits doubled every month",
    "insider tips guarantee stock profit",
    "penny stocks about to explode",
    "cash out your winnings instantly",
    "prize notification final reminder",
    "second notice unclaimed prize expires",
    "your reward points convert to cash",
    "redeem reward miles for free flights",
    "free membership upgrade this week",
    "platinum membership at no cost",
    "winner announcement inside open now",
    "instant approval for any loan amount",
    "zero interest loan for thirty days",
    "settle your debt for pennies",
    "government grant money unclaimed",
    "grant approval guaranteed apply now",
    "your application for cash was approved",
    "earn cash taking easy surveys",
    "paid surveys pay five dollars each",
    "watch ads and earn instant cash",
    "this miracle diet melts fat overnight",
    "ancient cure doctors refuse to share",
    "enlargement guaranteed or money back",
    "perform better tonight with one pill",
    "the pill every man is talking about",
    "hair loss cure found at last",
    "wrinkle cure erases ten years",
    "whiter teeth with one cheap trick",
    "casino night free chips for all",
    "poker tournament with million dollar prize",
    "betting tips from professional winners",
    "guaranteed odds beat the bookies",
    "jackpot alert your numbers came up",
    "lottery syndicate seats still available",
    "claim codes inside act fast",
    "offer valid for sixty seconds only",
    "prices slashed on all luxury goods",
    "replica watches indistinguishable from real",
    "cheap software licenses original quality",
    "premium channels unlocked for free",
    "free phones for loyal customers",
    "upgrade your plan at no cost",
    "hidden fees waived this month",
    "your unpaid bill needs payment here",
    "outstanding payment release your parcel",
    "customs fee required for delivery",
    "parcel held pay the release fee",
    "delivery failed confirm your address now",
    "tax refund waiting for your claim",
    "claim your tax rebate today",
    "official notice you owe nothing extra",
    "one click stands between you and riches",
    "fortune favors those who act now",
    "your dream car for half price",
    "drive away a bargain sports car today",
    "auction secrets dealers do not want known",
    "bid now luxury goods from one dollar",
    "everything one dollar final day",
    "make money while you sleep",
    "retire rich with this one trick",
    "financial freedom in ninety days",
    "the wealth formula banks hide",
    "your neighbors are already earning cash",
    "join the winners circle today",
    "cash waiting confirm your details",
    "free money no strings attached",
    "double cash back on every purchase",
    "instant credit approval guaranteed",
    "leaked method prints cash daily",
    "new loophole pays hundreds weekly",
    "exclusive invite expires in one hour",
    "act immediately to secure your bonus",
    "last chance to claim your prize",
    "winner list closes tonight",
    "verify now to receive your transfer",
    "your payout is one click away",
)

# Ham-core vocabulary reserved for hidden-text injection. These words are
# common in hammy phrases, never in neutral ones, so a hidden injection
# can be asserted absent from the visible text of the email carrying it.
HIDDEN_WORD_POOL = (
    "meeting", "agenda", "quarterly", "budget", "payroll", "timesheet",
    "deadline", "milestone", "standup", "feedback", "revision",
    "spreadsheet", "presentation", "conference", "webinar", "seminar",
    "workshop", "onboarding", "calendar", "appointment", "birthday",
    "recipe", "garden", "hiking", "committee", "newsletter", "deployment",
    "forecast", "rollback", "sprint",
)

HAMMY_PHRASES = (
    "the meeting moved to thursday morning",
    "please add this to the meeting agenda",
    "minutes from the last meeting are attached",
    "i shared the agenda before the meeting",
    "quarterly numbers look better than expected",
    "the quarterly review starts at nine",
    "budget sign off is due on monday",
    "we trimmed the travel budget slightly",
    "the invoice from the vendor arrived",
    "i approved the invoice this morning",
    "payroll closes on the last friday",
    "submit your timesheet before the weekend",
    "my timesheet is missing two days",
    "the deadline slipped by one week",
    "we are on track for the deadline",
    "the milestone demo went really well",
    "next milestone lands at the end of the month",
    "standup is moved to ten today",
    "quick note before the standup",
    "thanks for the thoughtful feedback",
    "i folded your feedback into the draft",
    "the second revision reads much better",
    "one more revision and we are done",
    "numbers live in the shared spreadsheet",
    "i cleaned up the spreadsheet tabs",
    "the presentation needs two more slides",
    "rehearsal for the presentation is at four",
    "the conference schedule came out today",
    "are you attending the spring conference",
    "the webinar recording is online now",
    "i registered us for the webinar",
    "the seminar on friday was excellent",
    "notes from the seminar are in the folder",
    "the workshop ran long but was useful",
    "sign up for the writing workshop",
    "onboarding for the new hire starts monday",
    "the onboarding checklist is nearly done",
    "i blocked time on your calendar",
    "my calendar is open thursday afternoon",
    "the dentist appointment is at noon",
    "i moved my appointment to next week",
    "we are planning a small birthday lunch",
    "her birthday falls on a saturday",
    "my vacation starts after the release",
    "booking vacation days for august",
    "grandma sent her famous soup recipe",
    "try this quick pasta recipe tonight",
    "the garden needs watering twice a day",
    "tomatoes in the garden finally ripened",
    "the hiking trail was muddy but fun",
    "we went hiking by the lake",
    "the committee approved the proposal",
    "the committee meets once a month",
    "the newsletter goes out on friday",
    "i drafted the newsletter introduction",
    "the deployment finished without issues",
    "we scheduled the deployment for tonight",
    "rollback plan for the deployment is ready",
    "the sprint board needs grooming",
    "sprint planning took the whole morning",
    "code review comments are addressed",
    "please review the attached draft",
    "the draft report is ready for edits",
    "the final report ships on friday",
    "project kickoff happened this morning",
    "the project timeline looks realistic",
    "interviews for the analyst role continue",
    "the candidate accepted our offer letter",
    "the internal wiki page is updated",
    "server maintenance window is saturday night",
    "the release notes are drafted",
    "the bugfix landed in the nightly build",
    "the ticket queue is finally under control",
    "i closed the stale tickets yesterday",
    "training materials are in the shared drive",
    "the training session repeats on wednesday",
    "forecast numbers arrive later today",
    "the forecast assumes flat growth",
    "carpool leaves the lot at eight",
    "the commute was quick this morning",
    "lunch and learn is on thursday",
    "team lunch is booked for friday",
    "coffee catch up tomorrow morning",
    "grabbing coffee before the nine thirty",
    "the kids loved the science museum",
    "family dinner is at six on sunday",
    "weekend plans include the farmers market",
    "the long weekend starts thursday evening",
    "holiday schedule was posted to the wiki",
    "the office closes early before the holiday",
    "my flight lands at seven on monday",
    "hotel and flights are booked",
    "expense reports are due end of month",
    "i filed my expenses this morning",
    "the printer on floor two works again",
    "facilities fixed the meeting room screen",
    "new chairs arrived for the quiet room",
    "the stand up desk was delivered",
    "whiteboard markers are restocked",
    "the quarterly town hall is next week",
    "slides for the town hall are final",
    "performance reviews open on monday",
    "self review drafts are due friday",
    "the mentoring program pairs are announced",
    "book club picks a new title tonight",
    "the choir rehearses on tuesday evenings",
    "piano lessons moved to thursday",
    "soccer practice ends at seven",
    "the marathon training plan starts slow",
    "yoga class was packed this morning",
    "the library books are due back",
    "museum tickets are cheaper on weekdays",
    "the new exhibit opens next month",
    "dinner reservations are at eight",
    "the recipe calls for fresh basil",
    "leftover cake is in the kitchen",
    "the plumber comes between two and four",
    "the car passed inspection yesterday",
    "bike tires needed air again",
    "the dog learned a new trick",
    "the cat knocked over the plant",
    "we repainted the spare bedroom",
    "new curtains arrived for the study",
    "the bookshelf finally got assembled",
    "garage sale on our street saturday",
    "neighbors hosted a lovely barbecue",
    "the school play is next thursday",
    "parent teacher night ran late",
    "homework help session after dinner",
    "the science fair project needs poster board",
    "swimming lessons resume in march",
    "the orchestra concert sold out",
    "grandpa fixed the old radio",
    "the garden club swaps seeds sunday",
    "compost bin needs turning this week",
    "the hiking club maps a new route",
    "birdwatching was great at dawn",
    "the photography walk starts at golden hour",
    "knitting circle meets wednesday",
    "the puzzle took us three evenings",
    "board game night is back on",
    "the quiz team placed second",
    "volunteering shift is sunday morning",
    "food drive boxes fill up fast",
    "the charity run raised record funds",
    "blood drive signups open tomorrow",
    "the book fair needs more helpers",
)

NEUTRAL_PHRASES = (
    "hope you are doing well",
    "thanks for the quick reply",
    "thanks again for your patience",
    "just checking in on this",
    "following up on my last note",
    "let me know what you think",
    "let me know if that works",
    "does tomorrow work for you",
    "talk to you soon",
    "looking forward to hearing from you",
    "sorry for the late reply",
    "apologies for the short notice",
    "no rush on this at all",
    "whenever you get a chance",
    "happy to chat if easier",
    "feel free to call me",
    "i will send details later today",
    "more details to follow shortly",
    "see my notes below",
    "adding a few thoughts here",
    "that sounds good to me",
    "works for me as well",
    "either option is fine",
    "i am flexible on timing",
    "morning suits me best",
    "afternoon would be better for me",
    "can we push this to tomorrow",
    "can we make it earlier",
    "running ten minutes behind",
    "i might be a few minutes late",
    "thanks for understanding",
    "much appreciated as always",
    "great catching up yesterday",
    "good talking with you earlier",
    "it was nice to finally connect",
    "long time no see",
    "hope your week is going well",
    "hope the weather holds up",
    "what a rainy week it has been",
    "lovely sunshine out there today",
    "stay warm out there",
    "the days are getting longer",
    "summer went by so fast",
    "autumn arrived overnight it seems",
    "is this still a good time",
    "did you get my earlier note",
    "just resending in case it got lost",
    "reattaching the file here",
    "the attachment should open fine now",
    "let me know if the link works",
    "i cannot open the file on my phone",
    "will read this properly tonight",
    "skimmed it and it looks fine",
    "a couple of small typos otherwise fine",
    "made a few tiny edits",
    "everything else stays the same",
    "no changes needed from my side",
    "all good on my end",
    "nothing new to add here",
    "we are all set then",
    "consider it done",
    "done and dusted",
    "this is now sorted",
    "case closed on that one",
    "moving this to the top of my list",
    "i will take care of it",
    "leave it with me",
    "i owe you one",
    "thanks a million for the help",
    "could not have done it without you",
    "give my best to everyone",
    "say hello to the others",
    "wishing you a relaxing evening",
    "have a wonderful rest of the day",
    "enjoy the rest of your week",
    "see you around the usual place",
    "same time next week then",
    "let us keep this slot",
    "circling back as promised",
    "as discussed earlier today",
    "per our chat this morning",
    "quick question when you have a minute",
    "one small thing before i forget",
    "almost forgot to mention this",
    "last thing i promise",
    "in other news all is well",
    "not urgent just curious",
    "out of curiosity did it ship",
    "any word on the timing",
    "any update on your side",
    "still waiting to hear back",
    "they said they would confirm soon",
    "should know more by friday",
    "will confirm once i hear",
    "keeping you in the loop",
    "looping in as promised",
    "forwarding this for visibility",
    "sharing in case it is useful",
    "you might find this interesting",
    "came across this and thought of you",
    "this made me laugh today",
    "hope this brightens your day",
    "what a week it has been",
    "busy days but good ones",
    "things are settling down finally",
    "back from a few days away",
    "catching up on messages now",
    "inbox zero at last",
    "my phone was off all weekend",
    "reception was terrible up there",
    "back online and catching up",
    "i will be offline after five",
    "heading out shortly",
    "stepping into another call",
    "can i ring you in an hour",
    "free after three if that helps",
    "my morning just opened up",
    "tomorrow is wide open for me",
    "next week looks calmer",
    "this month filled up quickly",
    "time really flies lately",
    "cannot believe it is already friday",
    "the year is racing by",
    "see you in the new year",
    "almost time for the break",
    "counting down the days",
    "nearly there now",
    "one step at a time",
    "slow and steady does it",
    "better late than never",
    "all in good time",
    "fingers crossed it goes smoothly",
    "touch wood it stays quiet",
    "so far so good",
    "no news is good news",
    "keeping expectations modest",
    "pleasantly surprised overall",
    "better than i expected honestly",
    "could be worse could be better",
    "mixed bag but mostly fine",
    "smooth sailing on this end",
    "quiet day over here",
    "nothing exciting to mention",
    "same old same old",
    "the usual routine this week",
    "back to the routine tomorrow",
    "easing into the day slowly",
    "early start again tomorrow",
    "calling it a day now",
    "signing off for tonight",
)

HAM_PHRASES = NEUTRAL_PHRASES + HAMMY_PHRASES

SUBJECT_WORDS = (
    "quick", "note", "update", "question", "hello", "checking", "in",
    "follow", "up", "small", "thing", "today", "tomorrow", "this", "week",
    "reply", "thoughts", "plans", "catching", "soon",
)
